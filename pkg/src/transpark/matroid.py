"""Transversal matroid rank oracle, duality, Tutte polynomial and h-vector."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .core_sets import SetSystem, bits, max_matching, subsets_of_size
from .errors import BudgetExceeded

TUTTE_MAX_N = 24


class TransversalMatroid:
    """Rank oracle for ``M[A]`` backed by maximum matchings.

    Rank values are cached by subset bitmask.  Cache writes are idempotent,
    so sharing an instance between threads is harmless.
    """

    def __init__(self, system: SetSystem):
        self.system = system
        self._rank: dict[int, int] = {}
        self.d = self.rank(system.ground.full)

    @property
    def n(self) -> int:
        return self.system.n

    @property
    def full(self) -> int:
        return self.system.ground.full

    def rank(self, T: int) -> int:
        r = self._rank.get(T)
        if r is None:
            r = max_matching(self.system, T).size
            self._rank[T] = r
        return r

    def rank_formula(self, T: int) -> int:
        """``min_J' |A(J') & T| + d - |J'|`` over all block sets ``J'``."""
        d = self.system.d
        return min((self.system.union(J) & T).bit_count() + d - J.bit_count()
                   for J in range(1 << d))

    def dual_rank(self, T: int) -> int:
        return self.rank(self.full & ~T) - self.d + T.bit_count()

    def is_independent(self, T: int) -> bool:
        return self.rank(T) == T.bit_count()

    def closure(self, T: int) -> int:
        r = self.rank(T)
        cl = T
        for s in bits(self.full & ~T):
            if self.rank(T | 1 << s) == r:
                cl |= 1 << s
        return cl

    def bases(self) -> list[int]:
        return [T for T in subsets_of_size(self.n, self.d) if self.rank(T) == self.d]

    def hyperplanes(self) -> list[int]:
        """Maximal rank-(d-1) flats, as closures of independent (d-1)-sets."""
        flats = {self.closure(T) for T in subsets_of_size(self.n, self.d - 1)
                 if self.is_independent(T)}
        return sorted(flats)

    def cocircuits(self) -> list[int]:
        return sorted(self.full & ~H for H in self.hyperplanes())


@dataclass(frozen=True)
class TuttePoly:
    coeffs: dict  # (i, j) -> coefficient of x^i y^j

    def __call__(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.coeffs.items())

    def to_json(self) -> dict:
        return {"terms": [{"x": i, "y": j, "c": c} for (i, j), c in sorted(self.coeffs.items())]}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in sorted(self.coeffs.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(p for p in (_power("x", i), _power("y", j)) if p)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def _power(v: str, e: int) -> str:
    return "" if e == 0 else v if e == 1 else f"{v}^{e}"


def tutte(M: TransversalMatroid, max_n: int = TUTTE_MAX_N) -> TuttePoly:
    """Corank-nullity expansion over all ``2^n`` subsets."""
    if M.n > max_n:
        raise BudgetExceeded(f"Tutte sweep over 2^{M.n} subsets exceeds budget n <= {max_n}")
    # count subsets by (corank, nullity), then expand the binomials once
    counts: dict[tuple[int, int], int] = {}
    for T in range(1 << M.n):
        r = M.rank(T)
        key = (M.d - r, T.bit_count() - r)
        counts[key] = counts.get(key, 0) + 1
    coeffs: dict[tuple[int, int], int] = {}
    for (a, b), mult in counts.items():
        for i in range(a + 1):
            ca = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                c = mult * ca * comb(b, j) * (-1) ** (b - j)
                coeffs[(i, j)] = coeffs.get((i, j), 0) + c
    return TuttePoly({k: v for k, v in sorted(coeffs.items()) if v})


def h_vector_from_tutte(M: TransversalMatroid, T: Optional[TuttePoly] = None) -> list[int]:
    """Coefficients of ``z^(n-d) * T(1, 1/z)``."""
    if T is None:
        T = tutte(M)
    top = M.n - M.d
    h = [0] * (top + 1)
    for (_, j), c in T.coeffs.items():
        h[top - j] += c
    return h


def cocircuits(M: TransversalMatroid) -> list[int]:
    return M.cocircuits()
