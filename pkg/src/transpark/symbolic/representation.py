"""Exact rational representations of transversal matroids and their hyperplanes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..core_sets import SetSystem, bits, max_matching, subsets_of_size
from ..errors import InputError, NonGenericError
from ..matroid import TransversalMatroid
from . import linalg
from .poly import MVPoly, expand_power

MAX_ATTEMPTS = 16
RANDOM_HIGH = 2 ** 16


@dataclass(frozen=True)
class Representation:
    system: SetSystem
    matrix: tuple[tuple[Fraction, ...], ...]  # d rows, one column per ground element
    mode: str
    seed: Optional[int]
    certified: bool

    @property
    def d(self) -> int:
        return len(self.matrix)

    @property
    def n(self) -> int:
        return self.system.n

    def column(self, s: int) -> tuple[Fraction, ...]:
        return tuple(row[s] for row in self.matrix)

    def columns(self, T: int) -> list[tuple[Fraction, ...]]:
        return [self.column(s) for s in bits(T)]

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "seed": self.seed,
            "certified": self.certified,
            "matrix": [[str(x) for x in row] for row in self.matrix],
        }


def representation_matrix(A: SetSystem, mode: str = "powers", seed: int = 0):
    """Matrix with the support pattern of ``A``; no genericity check."""
    if mode == "powers":
        return tuple(
            tuple(Fraction((s + 1) ** (j + 1)) if A.blocks[j] >> s & 1 else Fraction(0) for s in range(A.n))
            for j in range(A.d))
    if mode == "random":
        rng = random.Random(seed)
        return tuple(
            tuple(Fraction(rng.randint(1, RANDOM_HIGH)) if A.blocks[j] >> s & 1 else Fraction(0)
                  for s in range(A.n))
            for j in range(A.d))
    raise InputError(f"unknown representation mode {mode!r}")


def genericity_witness(A: SetSystem, matrix, M: Optional[TransversalMatroid] = None) -> Optional[int]:
    """First column set ``T`` (|T| <= d) whose rank differs from its matching rank."""
    M = M or TransversalMatroid(A)
    for k in range(1, len(matrix) + 1):
        for T in subsets_of_size(A.n, k):
            cols = [[row[s] for row in matrix] for s in bits(T)]
            if linalg.rank(cols) != M.rank(T):
                return T
    return None


def build_representation(A: SetSystem, mode: str = "powers", seed: int = 0,
                         M: Optional[TransversalMatroid] = None) -> Representation:
    """Build and certify a representation of ``M[A]``.

    ``powers`` puts ``(s+1)^(j+1)`` at each support position; ``random``
    draws from ``[1, 2^16]`` and retries with the next seed on failure.
    Certification checks column ranks against matching ranks and, for
    full-rank presentations, the support of every hyperplane form.
    """
    M = M or TransversalMatroid(A)
    if mode == "powers":
        matrix = representation_matrix(A, "powers")
        problem = _certification_problem(A, matrix, M)
        if problem:
            raise NonGenericError(f"powers-mode matrix is not generic ({problem}); use mode=random")
        return Representation(A, matrix, "powers", None, True)
    if mode != "random":
        raise InputError(f"unknown representation mode {mode!r}")
    for attempt in range(MAX_ATTEMPTS):
        matrix = representation_matrix(A, "random", seed + attempt)
        if not _certification_problem(A, matrix, M):
            return Representation(A, matrix, "random", seed + attempt, True)
    raise NonGenericError(f"no generic matrix found in {MAX_ATTEMPTS} draws from seed {seed}")


def _certification_problem(A: SetSystem, matrix, M: TransversalMatroid) -> Optional[str]:
    bad = genericity_witness(A, matrix, M)
    if bad is not None:
        return f"rank mismatch on columns {A.ground.names(bad)}"
    if M.d == A.d:
        for H in _hyperplanes(A, matrix, M):
            support = sum(1 << j for j, c in enumerate(H.form) if c)
            if support != form_support_from_matchings(A, H.flat):
                return f"degenerate form for flat {A.ground.names(H.flat)}"
    return None


@dataclass(frozen=True)
class Hyperplane:
    flat: int
    form: tuple[Fraction, ...]
    rho: int

    def power(self) -> MVPoly:
        return expand_power(self.form, self.rho)

    def form_str(self) -> str:
        return str(MVPoly.linear(self.form))

    def to_json(self, ground=None) -> dict:
        return {
            "flat": ground.names(self.flat) if ground else list(bits(self.flat)),
            "form": [str(c) for c in self.form],
            "rho": self.rho,
        }


def normalize_form(form) -> tuple[Fraction, ...]:
    lead = next(c for c in form if c)
    return tuple(Fraction(c) / lead for c in form)


def hyperplanes_with_forms(V: Representation, M: Optional[TransversalMatroid] = None) -> list[Hyperplane]:
    """All hyperplanes of the configuration with normalized defining forms."""
    if not V.certified:
        raise NonGenericError("representation is not certified")
    M = M or TransversalMatroid(V.system)
    if M.d != V.d:
        raise InputError("representation of a rank-deficient presentation; normalize first")
    return _hyperplanes(V.system, V.matrix, M)


def _hyperplanes(A: SetSystem, matrix, M: TransversalMatroid) -> list[Hyperplane]:
    d, n = len(matrix), A.n
    cols = [tuple(row[s] for row in matrix) for s in range(n)]
    found: dict[int, Hyperplane] = {}
    for T in subsets_of_size(n, d - 1):
        if not M.is_independent(T):
            continue
        kernel = linalg.nullspace([cols[s] for s in bits(T)], d)
        if len(kernel) != 1:
            continue  # columns of T dependent in this matrix; caught by the rank check
        form = normalize_form(kernel[0])
        H = 0
        for s in range(n):
            if sum(a * b for a, b in zip(form, cols[s])) == 0:
                H |= 1 << s
        if H not in found:
            found[H] = Hyperplane(H, form, (A.ground.full & ~H).bit_count())
    return [found[H] for H in sorted(found)]


def form_support_from_matchings(A: SetSystem, H: int) -> int:
    """Block indices ``j`` for which ``(A_j' & H : j' != j)`` has a matching of size d-1.

    These are exactly the nonzero coordinates of the form defining ``H``
    in a generic representation.
    """
    if A.d == 1:
        return 1
    J = 0
    for j in range(A.d):
        sub = SetSystem(A.ground, tuple(b & H for i, b in enumerate(A.blocks) if i != j))
        if max_matching(sub).size == A.d - 1:
            J |= 1 << j
    return J
