"""The parking polymatroid of a set system and its lattice points.

``f_A(J)`` is the dual rank of ``A(J)``; the lattice points of
``{q >= 0 : sum_{j in J} q_j <= f_A(J)}`` are the A-parking functions, and
the exponent vectors outside it generate the nonparking monomial ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

from .core_sets import bits
from .errors import InputError, InternalCheckError
from .matroid import TransversalMatroid


@dataclass(frozen=True)
class SubmodularTable:
    d: int
    values: tuple[int, ...]  # indexed by block-set bitmask

    def __call__(self, J: int) -> int:
        return self.values[J]

    def violations(self) -> list[tuple[str, int, int]]:
        """Every failed normalization/monotonicity/submodularity check."""
        f = self.values
        size = 1 << self.d
        bad = []
        if f[0] != 0:
            bad.append(("normalized", 0, 0))
        for I in range(size):
            if f[I] < 0:
                bad.append(("nonnegative", I, I))
            for j in bits(~I & (size - 1)):
                if f[I] > f[I | 1 << j]:
                    bad.append(("monotone", I, I | 1 << j))
            for J in range(I + 1, size):
                if f[I & J] + f[I | J] > f[I] + f[J]:
                    bad.append(("submodular", I, J))
        return bad


def parking_submodular(M: TransversalMatroid) -> SubmodularTable:
    A = M.system
    if M.d != A.d:
        raise InputError(f"presentation is not full rank (rank {M.d}, {A.d} blocks); normalize first")
    table = SubmodularTable(A.d, tuple(M.dual_rank(A.union(J)) for J in range(1 << A.d)))
    bad = table.violations()
    if bad:
        raise InternalCheckError("f_A violates polymatroid axioms", witness=bad[0])
    return table


class Polymatroid:
    """Integer polymatroid defined by a submodular table."""

    def __init__(self, table: SubmodularTable):
        self.table = table
        self.d = table.d
        self._graded: Optional[list[list[tuple[int, ...]]]] = None

    @classmethod
    def of_matroid(cls, M: TransversalMatroid) -> "Polymatroid":
        return cls(parking_submodular(M))

    @property
    def top(self) -> int:
        return self.table((1 << self.d) - 1)

    def member(self, q: Sequence[int]) -> bool:
        if len(q) != self.d:
            raise InputError(f"exponent vector has length {len(q)}, expected {self.d}")
        if any(x < 0 for x in q):
            return False
        f = self.table.values
        for J in range(1, 1 << self.d):
            if sum(q[j] for j in bits(J)) > f[J]:
                return False
        return True

    def lattice_points(self) -> list[list[tuple[int, ...]]]:
        """Lattice points grouped by degree, lexicographic within a degree."""
        if self._graded is None:
            graded = [[] for _ in range(self.top + 1)]
            for q in self._dfs():
                graded[sum(q)].append(q)
            self._graded = graded
        return self._graded

    def _dfs(self):
        d, f = self.d, self.table.values
        bounds = [f[1 << j] for j in range(d)]
        # constraints whose highest coordinate is k are checked once q_k is fixed
        by_last = [[J for J in range(1, 1 << d) if J.bit_length() == k + 1] for k in range(d)]
        q = [0] * d

        def rec(k):
            if k == d:
                yield tuple(q)
                return
            for v in range(bounds[k] + 1):
                q[k] = v
                if any(sum(q[j] for j in bits(J)) > f[J] for J in by_last[k]):
                    break  # larger v only makes every partial sum bigger
                yield from rec(k + 1)
            q[k] = 0

        yield from rec(0)

    def points(self) -> list[tuple[int, ...]]:
        return [q for level in self.lattice_points() for q in level]

    def graded_counts(self) -> list[int]:
        counts = [len(level) for level in self.lattice_points()]
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return counts

    def minimal_nonmembers(self) -> list[tuple[int, ...]]:
        """Minimal exponent vectors outside the polytope, by degree then lex."""
        bounds = [self.table(1 << j) + 1 for j in range(self.d)]
        out = []
        for q in product(*(range(b + 1) for b in bounds)):
            if self.member(q):
                continue
            if all(self.member(q[:j] + (q[j] - 1,) + q[j + 1:]) for j in range(self.d) if q[j]):
                out.append(q)
        out.sort(key=lambda q: (sum(q), q))
        return out

    def purity_check(self) -> tuple[bool, Optional[tuple[int, ...]]]:
        """Every lattice point lies below some point of top degree."""
        graded = self.lattice_points()
        maximal = graded[self.top]
        for q in self.points():
            if not any(all(a <= b for a, b in zip(q, m)) for m in maximal):
                return False, q
        return True, None

    def facets(self) -> list[str]:
        lines = []
        for J in range(1, 1 << self.d):
            lhs = "+".join(f"q_{j + 1}" for j in bits(J))
            lines.append(f"{lhs} <= {self.table(J)}")
        return lines

    def to_json(self) -> dict:
        return {
            "f": {str(J): self.table(J) for J in range(1 << self.d)},
            "points_by_degree": [[list(q) for q in level] for level in self.lattice_points()],
            "generators": [list(q) for q in self.minimal_nonmembers()],
        }


def member(P: Polymatroid, q) -> bool:
    return P.member(q)


def lattice_points(P: Polymatroid):
    return P.lattice_points()


def graded_counts(P: Polymatroid) -> list[int]:
    return P.graded_counts()


def minimal_nonmembers(P: Polymatroid):
    return P.minimal_nonmembers()


def purity_check(P: Polymatroid):
    return P.purity_check()
