"""Transversal matroids, their parking polymatroids and power ideals."""

from .core_sets import (GroundSet, Matching, SetSystem, full_transversal_exists, hall_violator,
                        max_matching, normalize_presentation, parse_set_system, random_set_system)
from .errors import BudgetExceeded, InputError, InternalCheckError, NonGenericError
from .matroid import TransversalMatroid, TuttePoly, cocircuits, h_vector_from_tutte, tutte
from .polymatroid import Polymatroid, SubmodularTable, parking_submodular

__version__ = "0.1.0"
