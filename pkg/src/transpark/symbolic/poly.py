"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence


class MVPoly:
    """Polynomial in ``x_1..x_nvars`` stored as ``{exponent tuple: Fraction}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], Fraction] = {}
        for q, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(q)] = c

    @classmethod
    def one(cls, nvars: int) -> "MVPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "MVPoly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for i in range(n)): c for j, c in enumerate(coeffs)})

    @property
    def degree(self) -> int:
        return max((sum(q) for q in self.terms), default=-1)

    def coefficient(self, q) -> Fraction:
        return self.terms.get(tuple(q), Fraction(0))

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def __eq__(self, other):
        return isinstance(other, MVPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "MVPoly") -> "MVPoly":
        out = dict(self.terms)
        for q, c in other.terms.items():
            out[q] = out.get(q, 0) + c
        return MVPoly(self.nvars, out)

    def __mul__(self, other: "MVPoly") -> "MVPoly":
        out: dict = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = tuple(a + b for a, b in zip(q1, q2))
                out[q] = out.get(q, 0) + c1 * c2
        return MVPoly(self.nvars, out)

    def to_json(self) -> list[dict]:
        return [{"q": list(q), "c": f"{c.numerator}/{c.denominator}"} for q, c in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for q, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x_{j + 1}" if e == 1 else f"x_{j + 1}^{e}" for j, e in enumerate(q) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def expand_power(form: Sequence, e: int) -> MVPoly:
    """Multinomial expansion of ``(sum_j form[j] x_j)^e``."""
    d = len(form)
    coeffs = [Fraction(c) for c in form]
    live = [j for j in range(d) if coeffs[j]]
    if e == 0:
        return MVPoly.one(d)
    if not live:
        return MVPoly(d)
    fe = factorial(e)
    terms = {}
    for ks in _compositions(e, len(live)):
        c = Fraction(fe)
        q = [0] * d
        for j, k in zip(live, ks):
            c = c / factorial(k) * coeffs[j] ** k
            q[j] = k
        terms[tuple(q)] = c
    return MVPoly(d, terms)
