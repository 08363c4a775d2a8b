from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import S
from oracles import poly_expand
from transpark import Polymatroid, SetSystem, TransversalMatroid, h_vector_from_tutte, random_set_system
from transpark.errors import BudgetExceeded, InputError, NonGenericError
from transpark.symbolic import (MVPoly, SquarefreeAlgebra, build_representation, expand_power,
                                exponent_vectors, form_support_from_matchings, genericity_witness,
                                graded_dim_via_rank, hyperplanes_with_forms, normalize_form, phi_image,
                                representation_matrix, verify_generators_in_nonparking)
from transpark.symbolic import linalg

# reference power-ideal generators of example3_2: (coefficients of x_1..x_3, exponent)
EX32_GENERATORS = [
    ((0, -2, 1), 6), ((0, 1, 0), 4), ((0, -6, 1), 6), ((0, 0, 1), 5),
    ((-2, 1, 0), 6), ((-8, 6, -1), 8), ((-28, 4, 5), 8), ((-4, 0, 1), 8),
    ((1, 0, 0), 5), ((-7, 1, 0), 6), ((-42, 6, -1), 8),
]

EX32_MATRIX = [
    [1, 2, 0, 0, 0, 0, 7, 0, 9, 10],
    [0, 4, 0, 0, 0, 36, 49, 64, 0, 0],
    [0, 8, 27, 64, 125, 216, 0, 0, 0, 0],
]

# powers mode gives det [[1,2,0],[1,4,9],[1,8,27]] = 0 although a transversal exists
NONGENERIC = SetSystem.from_lists(["1", "2", "3"], [["1", "2"], ["1", "2", "3"], ["1", "2", "3"]])


def F(*xs):
    return tuple(Fraction(x) for x in xs)


# -- linear algebra ---------------------------------------------------------

def test_rank_basic():
    assert linalg.rank([]) == 0
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == 3
    assert linalg.rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1


def test_rank_matches_det_on_hilbert():
    H = [[Fraction(1, i + j + 1) for j in range(5)] for i in range(5)]
    assert linalg.rank(H) == 5
    assert linalg.det(H) == Fraction(1, 266716800000)


def test_nullspace():
    (v,) = linalg.nullspace([[1, 0, 0], [0, 4, 0]], 3)
    assert v == [0, 0, 1]
    (v,) = linalg.nullspace([[2, 4]], 2)
    assert v == [-2, 1]
    assert len(linalg.nullspace([], 1)) == 1


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4))
def test_rank_plus_nullity(rows):
    assert linalg.rank(rows) + len(linalg.nullspace(rows, 3)) == 3
    for v in linalg.nullspace(rows, 3):
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


# -- polynomials ------------------------------------------------------------

def test_expand_power_examples():
    p = expand_power(F(0, -2, 1), 2)
    assert p.terms == {(0, 2, 0): 4, (0, 1, 1): -4, (0, 0, 2): 1}
    assert expand_power(F(3, -1, 5), 0) == MVPoly.one(3)
    assert expand_power(F(1, 0, 0), 5).terms == {(5, 0, 0): 1}


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(0, 6))
def test_expand_power_against_repeated_product(form, e):
    p = expand_power(F(*form), e)
    assert p.terms == poly_expand(form, e)
    live = sum(1 for c in form if c)
    if live:
        assert len(p.terms) == comb(e + live - 1, live - 1)


def test_mvpoly_json_and_str():
    p = expand_power(F(1, Fraction(-1, 2)), 2)
    assert p.to_json() == [{"q": [0, 2], "c": "1/4"}, {"q": [1, 1], "c": "-1/1"}, {"q": [2, 0], "c": "1/1"}]
    assert str(p) == "x_1^2 - x_1*x_2 + 1/4*x_2^2"
    assert p.degree == 2


# -- representations ----------------------------------------------------------

def test_build_representation_example(ex32):
    V = build_representation(ex32)
    assert [list(r) for r in V.matrix] == EX32_MATRIX
    assert V.certified and V.mode == "powers"


def test_build_representation_small(tiny, coloop):
    assert build_representation(coloop).matrix == (F(1),)
    V = build_representation(tiny)
    assert [V.column(s) for s in range(3)] == [F(1, 0), F(2, 4), F(0, 9)]
    assert V.certified
    # every pair of columns is independent
    assert all(linalg.det([V.column(a), V.column(b)]) != 0 for a, b in [(0, 1), (0, 2), (1, 2)])


def test_powers_mode_can_fail():
    matrix = representation_matrix(NONGENERIC)
    assert linalg.det([[r[s] for r in matrix] for s in range(3)]) == 0
    assert genericity_witness(NONGENERIC, matrix) == 0b111
    with pytest.raises(NonGenericError):
        build_representation(NONGENERIC, "powers")


def test_powers_mode_rejects_degenerate_form():
    # column ranks all agree with matching ranks, but one hyperplane form loses a coordinate
    A = random_set_system(6, 4, 891)
    matrix = representation_matrix(A)
    assert genericity_witness(A, matrix) is None
    with pytest.raises(NonGenericError, match="degenerate form"):
        build_representation(A, "powers")
    V = build_representation(A, "random", seed=0)
    for h in hyperplanes_with_forms(V):
        support = sum(1 << j for j, c in enumerate(h.form) if c)
        assert support == form_support_from_matchings(A, h.flat)


def test_random_mode_fallback_and_reproducible():
    V = build_representation(NONGENERIC, "random", seed=7)
    W = build_representation(NONGENERIC, "random", seed=7)
    assert V.certified and V.mode == "random" and V.matrix == W.matrix
    assert V.seed >= 7
    for j, b in enumerate(NONGENERIC.blocks):
        for s in range(3):
            assert (V.matrix[j][s] != 0) == bool(b >> s & 1)
            assert 0 <= V.matrix[j][s] <= 2 ** 16


def test_unknown_mode(tiny):
    with pytest.raises(InputError):
        build_representation(tiny, "floats")


# -- hyperplanes ----------------------------------------------------------------

def test_hyperplanes_example(ex32):
    hyps = hyperplanes_with_forms(build_representation(ex32))
    assert len(hyps) == 11
    got = {(h.form, h.rho) for h in hyps}
    want = {(normalize_form(F(*form)), e) for form, e in EX32_GENERATORS}
    assert got == want
    by_form = {h.form: h for h in hyps}
    x1 = by_form[F(1, 0, 0)]
    assert x1.flat == S(ex32, 3, 4, 5, 6, 8) and x1.rho == 5
    h = by_form[normalize_form(F(0, -2, 1))]
    assert h.flat == S(ex32, 1, 2, 9, 10) and h.rho == 6


def test_hyperplanes_small(tiny, coloop):
    hyps = hyperplanes_with_forms(build_representation(tiny))
    got = {(h.flat, h.form, h.rho) for h in hyps}
    assert got == {(0b001, F(0, 1), 2), (0b100, F(1, 0), 2), (0b010, F(1, Fraction(-1, 2)), 2)}
    (h,) = hyperplanes_with_forms(build_representation(coloop))
    assert (h.flat, h.form, h.rho) == (0, F(1), 1)


def test_hyperplanes_need_certified(tiny):
    from dataclasses import replace
    V = replace(build_representation(tiny), certified=False)
    with pytest.raises(NonGenericError):
        hyperplanes_with_forms(V)


def test_hyperplane_forms_vanish_exactly_on_flat(ex32):
    V = build_representation(ex32)
    for h in hyperplanes_with_forms(V):
        for s in range(ex32.n):
            value = sum(a * b for a, b in zip(h.form, V.column(s)))
            assert (value == 0) == bool(h.flat >> s & 1)
        assert next(c for c in h.form if c) == 1


# -- generator supports --------------------------------------------------------

def test_verify_generators_example(ex32, ex32_matroid):
    V = build_representation(ex32)
    P = Polymatroid.of_matroid(ex32_matroid)
    report = verify_generators_in_nonparking(V, P)
    assert report["passed"] and len(report["generators"]) == 11
    x1 = next(g for g in report["generators"] if g["form"] == ["1", "0", "0"])
    assert x1["terms"] == 1 and x1["rho"] == 5


def test_verify_generators_small(tiny, coloop):
    for A, count in [(tiny, 3), (coloop, 1)]:
        V = build_representation(A)
        report = verify_generators_in_nonparking(V, Polymatroid.of_matroid(TransversalMatroid(A)))
        assert report["passed"] and len(report["generators"]) == count
    P = Polymatroid.of_matroid(TransversalMatroid(tiny))
    assert expand_power(F(1, Fraction(-1, 2)), 2).support() == [(0, 2), (1, 1), (2, 0)]
    assert not any(P.member(q) for q in [(0, 2), (1, 1), (2, 0)])


def test_verify_generators_flags_violation(tiny):
    from transpark import SubmodularTable
    V = build_representation(tiny)
    loose = Polymatroid(SubmodularTable(2, (0, 2, 2, 2)))
    report = verify_generators_in_nonparking(V, loose)
    assert not report["passed"]
    assert any(g["violations"] for g in report["generators"])


def test_verify_generators_arity(tiny, coloop):
    with pytest.raises(InputError):
        verify_generators_in_nonparking(build_representation(tiny),
                                        Polymatroid.of_matroid(TransversalMatroid(coloop)))


# -- the map to the squarefree algebra -------------------------------------------------

def test_phi_examples(ex32, ex32_matroid):
    V = build_representation(ex32)
    cc = ex32_matroid.cocircuits()
    unit = phi_image(V, (0, 0, 0), cc)
    assert unit.terms == {0: 1}
    assert phi_image(V, (5, 0, 0), cc).is_zero()
    assert not phi_image(V, (4, 1, 2), cc).is_zero()


def test_phi_linear_term(tiny):
    V = build_representation(tiny)
    cc = TransversalMatroid(tiny).cocircuits()
    assert phi_image(V, (1, 0), cc).terms == {0b001: 1, 0b010: 2}
    assert phi_image(V, (0, 1), cc).to_json(tiny.ground) == [
        {"y": ["2"], "c": "4/1"}, {"y": ["3"], "c": "9/1"}]
    with pytest.raises(InputError):
        phi_image(V, (1,), cc)


def test_graded_dim_examples(ex32, ex32_matroid):
    V = build_representation(ex32)
    assert graded_dim_via_rank(V, 0, ex32_matroid) == 1
    assert graded_dim_via_rank(V, 1, ex32_matroid) == 3
    assert graded_dim_via_rank(V, 7, ex32_matroid) == 8


def test_graded_dim_budget(ex32):
    with pytest.raises(BudgetExceeded):
        graded_dim_via_rank(build_representation(ex32), 5, max_rows=100)


def test_exponent_vectors():
    assert exponent_vectors(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert len(exponent_vectors(3, 7)) == comb(9, 2)


# -- instance-level properties on random systems ----------------------------------------

def certified(A, M):
    try:
        return build_representation(A, "powers", M=M)
    except NonGenericError:
        return build_representation(A, "random", seed=1, M=M)


systems = st.builds(lambda n, d, seed: random_set_system(n, min(d, n), seed),
                    st.integers(1, 8), st.integers(1, 4), st.integers(0, 10 ** 6))


@settings(max_examples=40, deadline=None)
@given(systems)
def test_form_support_characterization(A):
    M = TransversalMatroid(A)
    for h in hyperplanes_with_forms(certified(A, M), M):
        support = sum(1 << j for j, c in enumerate(h.form) if c)
        assert support == form_support_from_matchings(A, h.flat)


@settings(max_examples=40, deadline=None)
@given(systems)
def test_hyperplanes_are_cocircuit_complements(A):
    M = TransversalMatroid(A)
    hyps = hyperplanes_with_forms(certified(A, M), M)
    assert sorted(A.ground.full & ~h.flat for h in hyps) == M.cocircuits()


@settings(max_examples=40, deadline=None)
@given(systems)
def test_phi_kernel_is_nonparking(A):
    M = TransversalMatroid(A)
    V = certified(A, M)
    P = Polymatroid.of_matroid(M)
    cc = M.cocircuits()
    alg = SquarefreeAlgebra(cc)
    for k in range(A.n - M.d + 1):
        for q in exponent_vectors(A.d, k):
            assert phi_image(V, q, cc, alg).is_zero() != P.member(q), q


@settings(max_examples=40, deadline=None)
@given(systems)
def test_graded_dims_equal_h_vector(A):
    M = TransversalMatroid(A)
    V = certified(A, M)
    h = h_vector_from_tutte(M)
    assert [graded_dim_via_rank(V, k, M) for k in range(len(h))] == h
