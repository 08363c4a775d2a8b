"""End-to-end instance verification used by ``transpark verify``/``report``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .core_sets import SetSystem, normalize_presentation
from .errors import BudgetExceeded, InputError, NonGenericError
from .matroid import TUTTE_MAX_N, TransversalMatroid, h_vector_from_tutte, tutte
from .polymatroid import Polymatroid
from .symbolic import (SquarefreeAlgebra, build_representation, exponent_vectors, graded_dim_via_rank,
                       hyperplanes_with_forms, phi_image, verify_generators_in_nonparking)


@dataclass
class RunConfig:
    input: Optional[str] = None
    command: str = "verify"
    mode: str = "powers"
    seed: int = 0
    format: str = "text"
    max_n: int = TUTTE_MAX_N
    max_degree: Optional[int] = None
    degree: Optional[int] = None  # parking --degree

    def __post_init__(self):
        if self.max_n <= 0 or (self.max_degree is not None and self.max_degree < 0):
            raise InputError("budgets must be positive")


@dataclass
class VerificationReport:
    stages: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.stages) and all(s["passed"] for s in self.stages.values())

    def add(self, name: str, passed: bool, started: float, **details):
        self.stages[name] = {"passed": bool(passed), **details}
        self.timings[name] = round(time.perf_counter() - started, 6)

    def to_json(self) -> dict:
        return {"passed": self.passed, "stages": self.stages,
                "summary": self.summary, "timings": self.timings}


@dataclass
class Instance:
    """A full-rank presentation plus everything derived from it."""

    system: SetSystem
    normalized: bool
    matroid: TransversalMatroid
    polymatroid: Polymatroid

    @classmethod
    def from_system(cls, A: SetSystem) -> "Instance":
        B = normalize_presentation(A)
        M = TransversalMatroid(B)
        return cls(B, B.d != A.d, M, Polymatroid.of_matroid(M))


def verify(inst: Instance, mode: str = "powers", seed: int = 0, max_n: int = TUTTE_MAX_N,
           max_degree: Optional[int] = None) -> VerificationReport:
    A, M, P = inst.system, inst.matroid, inst.polymatroid
    top = A.n - M.d
    if max_degree is not None and top > max_degree:
        raise BudgetExceeded(f"top degree {top} exceeds --max-degree {max_degree}")
    rep = VerificationReport()

    t = time.perf_counter()
    try:
        V = build_representation(A, mode, seed, M)
    except NonGenericError as exc:
        rep.add("genericity", False, t, witness=str(exc))
        return rep
    rep.add("genericity", True, t, mode=V.mode, seed=V.seed)

    t = time.perf_counter()
    hyps = hyperplanes_with_forms(V, M)
    cocirc = M.cocircuits()
    complements = sorted(A.ground.full & ~H.flat for H in hyps)
    rep.add("hyperplanes", complements == cocirc, t, count=len(hyps), cocircuits=len(cocirc))

    t = time.perf_counter()
    gens = verify_generators_in_nonparking(V, P, hyps)
    bad = [g for g in gens["generators"] if not g["passed"]]
    rep.add("generator_support", gens["passed"], t, checked=len(hyps),
            witness=bad[0] if bad else None)

    t = time.perf_counter()
    algebra = SquarefreeAlgebra(cocirc)
    minimal = P.minimal_nonmembers()
    candidates = [q for k in range(top + 1) for q in exponent_vectors(M.d, k)]
    candidates += [q for q in minimal if sum(q) > top]
    wrong_zero = wrong_nonzero = None
    zeros = nonzeros = 0
    for q in candidates:
        image = phi_image(V, q, cocirc, algebra)
        inside = P.member(q)
        if image:
            nonzeros += 1
        else:
            zeros += 1
        if inside and not image and wrong_zero is None:
            wrong_zero = list(q)
        if not inside and image and wrong_nonzero is None:
            wrong_nonzero = list(q)
    rep.add("phi_kernel", wrong_zero is None and wrong_nonzero is None, t,
            checked=len(candidates), zero=zeros, nonzero=nonzeros,
            member_mapped_to_zero=wrong_zero, nonmember_not_killed=wrong_nonzero)

    t = time.perf_counter()
    h_tutte = h_vector_from_tutte(M, tutte(M, max_n))
    counts = P.graded_counts()
    dims = [graded_dim_via_rank(V, k, M) for k in range(top + 1)]
    rep.add("h_vector", h_tutte == _pad(counts, len(h_tutte)) == dims, t,
            tutte=h_tutte, lattice=counts, rank=dims)

    t = time.perf_counter()
    pure, witness = P.purity_check()
    rep.add("purity", pure, t, witness=list(witness) if witness else None)

    rep.summary = {"h_vector": h_tutte, "lattice_points": sum(counts),
                   "generators": len(hyps), "minimal_nonmembers": len(minimal)}
    return rep


def _pad(xs, n):
    return list(xs) + [0] * (n - len(xs))
