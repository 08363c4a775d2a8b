"""The squarefree algebra, the map x_j -> r_j, and graded dimension counts."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from ..core_sets import bits, mask_of
from ..errors import BudgetExceeded, InputError
from ..matroid import TransversalMatroid
from ..polymatroid import Polymatroid
from . import linalg
from .poly import MVPoly, _compositions
from .representation import Hyperplane, Representation, hyperplanes_with_forms

MAX_ROWS = 10 ** 5


class SqFreeElement:
    """Element of the squarefree algebra: ``{support bitmask: coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, Fraction] = {T: Fraction(c) for T, c in (terms or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, SqFreeElement) and self.terms == other.terms

    def to_json(self, ground=None) -> list[dict]:
        return [{"y": ground.names(T) if ground else list(bits(T)),
                 "c": f"{c.numerator}/{c.denominator}"}
                for T, c in sorted(self.terms.items())]


class SquarefreeAlgebra:
    """``k[y_s] / (y_s^2, prod_{s in C} y_s for cocircuits C)``.

    Only tracks which squarefree supports survive; the quotient is monomial,
    so a support is zero iff it contains a cocircuit.
    """

    def __init__(self, cocircuits: Sequence[int]):
        self.cocircuits = tuple(cocircuits)
        self._alive: dict[int, bool] = {}

    def alive(self, T: int) -> bool:
        a = self._alive.get(T)
        if a is None:
            a = not any(C & T == C for C in self.cocircuits)
            self._alive[T] = a
        return a


def phi_image(V: Representation, q: Sequence[int], cocircuits,
              algebra: Optional[SquarefreeAlgebra] = None) -> SqFreeElement:
    """Reduced image of ``x^q`` under ``x_j -> sum_s (v_s)_j y_s``."""
    if len(q) != V.d:
        raise InputError(f"exponent vector has length {len(q)}, expected {V.d}")
    algebra = algebra or SquarefreeAlgebra(cocircuits)
    integral = all(x.denominator == 1 for row in V.matrix for x in row)
    conv = int if integral else Fraction
    rows = [[(s, conv(x)) for s, x in enumerate(row) if x] for row in V.matrix]
    terms = {0: conv(1)}
    for j, e in enumerate(q):
        for _ in range(e):
            new: dict = {}
            for T, c in terms.items():
                for s, v in rows[j]:
                    if T >> s & 1:
                        continue
                    U = T | 1 << s
                    if algebra.alive(U):
                        new[U] = new.get(U, 0) + c * v
            terms = {T: c for T, c in new.items() if c}
            if not terms:
                return SqFreeElement()
    return SqFreeElement(terms)


def exponent_vectors(d: int, k: int) -> list[tuple[int, ...]]:
    """All ``q`` in ``N^d`` of degree ``k``, lexicographically ascending."""
    return sorted(_compositions(k, d)) if d else []


def graded_dim_via_rank(V: Representation, k: int, M: Optional[TransversalMatroid] = None,
                        max_rows: int = MAX_ROWS) -> int:
    """Rank of the matrix of coefficients of ``x^q`` in ``prod_{s in T} v_s(x)``.

    Rows run over ``|T| = k`` with ``S \\ T`` spanning, columns over degree-k
    exponent vectors.
    """
    if k < 0:
        raise InputError("degree must be nonnegative")
    if comb(V.n, k) > max_rows:
        raise BudgetExceeded(f"C({V.n},{k}) rows exceeds budget {max_rows}")
    M = M or TransversalMatroid(V.system)
    full = V.system.ground.full
    linear = [MVPoly.linear(V.column(s)) for s in range(V.n)]
    cols = exponent_vectors(V.d, k)
    matrix = []
    for combo in combinations(range(V.n), k):
        T = mask_of(combo)
        if M.rank(full & ~T) != M.d:
            continue
        p = MVPoly.one(V.d)
        for s in combo:
            p = p * linear[s]
        matrix.append([p.coefficient(q) for q in cols])
    return linalg.rank(matrix)


def verify_generators_in_nonparking(V: Representation, P: Polymatroid,
                                    hyperplanes: Optional[list[Hyperplane]] = None) -> dict:
    """Check every monomial of every power generator lies outside ``P``."""
    if V.d != P.d:
        raise InputError(f"representation has d={V.d} but polymatroid has d={P.d}")
    if hyperplanes is None:
        hyperplanes = hyperplanes_with_forms(V)
    entries = []
    for H in hyperplanes:
        support = H.power().support()
        bad = [list(q) for q in support if P.member(q)]
        entry = H.to_json(V.system.ground)
        entry.update(terms=len(support), violations=bad, passed=not bad)
        entries.append(entry)
    return {"passed": all(e["passed"] for e in entries), "generators": entries}
