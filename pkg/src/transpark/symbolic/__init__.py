from .algebra import (SqFreeElement, SquarefreeAlgebra, exponent_vectors,
                      graded_dim_via_rank, phi_image, verify_generators_in_nonparking)
from .poly import MVPoly, expand_power
from .representation import (Hyperplane, Representation, build_representation, form_support_from_matchings,
                             genericity_witness, hyperplanes_with_forms, normalize_form, representation_matrix)
