import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_unimodular_hnf, euclid_hnf, frac_det, frac_rank, is_hnf
from sharbly.linalg import (
    det,
    hnf_with_transform,
    identity,
    lattice_coords,
    matmul,
    matrix_from_json,
    matrix_to_json,
    matvec,
    quotient_coords,
    rank_rational,
    row_hnf,
    saturate,
    solve_rational,
    transpose,
    unimodular_completion,
)


def test_row_hnf_identity():
    assert row_hnf([[1, 0], [0, 1]]) == ([[1, 0], [0, 1]], 1)


@pytest.mark.parametrize(
    "M, expected",
    [
        # frozen from brute_unimodular_hnf
        ([[2, 1], [0, 1]], ([[2, 0], [0, 1]], 1)),
        ([[0, 1], [1, 0]], ([[1, 0], [0, 1]], -1)),
    ],
)
def test_row_hnf_examples(M, expected):
    H, d = expected
    assert brute_unimodular_hnf(M) == {(tuple(map(tuple, H)), d)}
    assert row_hnf(M) == expected


def test_row_hnf_rejects_rank_deficient():
    with pytest.raises(ValueError):
        row_hnf([[1, 2], [2, 4]])


def random_unimodular(rng, n, steps=10):
    U = identity(n)
    for _ in range(rng.randint(0, steps)):
        kind = rng.randrange(3)
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if kind == 0 and n > 1:
            q = rng.choice([-2, -1, 1, 2])
            U[i] = [a + q * b for a, b in zip(U[i], U[j])]
        elif kind == 1 and n > 1:
            U[i], U[j] = U[j], U[i]
        else:
            U[i] = [-a for a in U[i]]
    return U


full_rank = st.integers(1, 4).flatmap(
    lambda n: st.integers(n, n + 3).flatmap(
        lambda m: st.lists(st.lists(st.integers(-5, 5), min_size=m, max_size=m), min_size=n, max_size=n)
    )
).filter(lambda M: frac_rank(M) == len(M))


@settings(max_examples=200, deadline=None)
@given(full_rank, st.integers(0, 10**6))
def test_row_hnf_orbit_soundness(M, seed):
    rng = random.Random(seed)
    U = random_unimodular(rng, len(M))
    H, d = row_hnf(M)
    H2, d2 = row_hnf(matmul(U, M))
    assert H2 == H
    assert d2 == d * frac_det(U)
    assert is_hnf(H)
    assert H == euclid_hnf(M)
    assert row_hnf(H) == (H, 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4))
def test_hnf_with_transform_any_rank(M):
    H, U, d, pivots = hnf_with_transform(M)
    assert matmul(U, M) == H
    assert frac_det(U) == d
    assert len(pivots) == frac_rank(M)
    assert H == euclid_hnf(M)


def test_rank_examples():
    assert rank_rational([[0, 0], [0, 0]]) == 0
    assert rank_rational(identity(3)) == 3
    assert rank_rational([[1, 2], [2, 4]]) == 1


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=5))
def test_rank_and_det_match_fraction_elimination(M):
    assert rank_rational(M) == frac_rank(M)
    sq = [row[: len(M)] for row in M] if len(M) <= 4 else None
    if sq:
        assert det(sq) == frac_det(sq)


def test_saturate_examples():
    # the line through (2, 0) contains (1, 0), and (1, 0) is primitive
    assert saturate([(2, 0)], 2).basis == ((1, 0),)
    assert saturate([(1, 0), (0, 1)], 2).basis == ((1, 0), (0, 1))
    L = saturate([], 2)
    assert L.rank == 0 and L.ambient_rank == 2


def test_lattice_coords_examples():
    L = saturate([(0, 1)], 2)
    assert lattice_coords(L, (0, 1)) == (1,)
    assert lattice_coords(L, (0, 2)) == (2,)
    assert lattice_coords(L, (1, 0)) is None
    L2 = saturate([(1, 0, 2), (0, 1, 1)], 3)
    for i, b in enumerate(L2.basis):
        assert lattice_coords(L2, b) == tuple(int(i == j) for j in range(2))


def test_quotient_coords_examples():
    Q = quotient_coords(saturate([(1, 0)], 2))
    # unimodular completion of e1 in Z^2 is e2: e1 -> 0, e2 -> 1
    assert matvec(Q, (1, 0)) == [0]
    assert matvec(Q, (0, 1)) == [1]
    assert quotient_coords(saturate([(1, 0), (0, 1)], 2)) == ()
    assert quotient_coords(saturate([], 2)) == ((1, 0), (0, 1))


vectors3 = st.lists(st.tuples(*[st.integers(-4, 4)] * 3), min_size=0, max_size=3)


@settings(max_examples=200, deadline=None)
@given(vectors3)
def test_saturation_properties(cols):
    L = saturate(cols, 3)
    assert L.rank == frac_rank(transpose(cols)) if cols else L.rank == 0
    assert saturate(L.basis, 3) == L
    # each input lies in L, and each basis vector is a rational combination of inputs
    for v in cols:
        assert lattice_coords(L, v) is not None
    for b in L.basis:
        assert frac_rank(transpose(list(cols) + [b])) == L.rank
    Q = quotient_coords(L)
    for b in L.basis:
        assert not any(matvec(Q, b))
    U, d = unimodular_completion(L)
    assert abs(frac_det(U)) == 1 and frac_det(U) == d
    if L.rank < 3:
        assert d == 1


@settings(max_examples=100, deadline=None)
@given(vectors3, st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_lattice_coords_inverts_basis(cols, c):
    L = saturate(cols, 3)
    c = c[: L.rank]
    v = [sum(ci * b[i] for ci, b in zip(c, L.basis)) for i in range(3)]
    assert lattice_coords(L, v) == tuple(c)


def test_quotient_of_saturated_is_torsion_free():
    # 2*(1,1,0) is in the span, so (1,1,0) must be in the lattice
    L = saturate([(2, 2, 0), (0, 0, 3)], 3)
    assert L.rank == 2
    assert lattice_coords(L, (1, 1, 0)) is not None
    assert lattice_coords(L, (0, 0, 1)) is not None


def test_solve_rational():
    b = [Fraction(1, 2), Fraction(-3)]
    assert solve_rational(identity(2), b) == b
    assert solve_rational([[1, 1], [1, 1]], [1, 2]) is None
    x = solve_rational([[1, 1]], [2])
    assert x[0] + x[1] == 2


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_rational_by_substitution(A, x0):
    b = matvec(A, x0)
    x = solve_rational(A, b)
    assert x is not None
    assert [sum(a * xi for a, xi in zip(row, x)) for row in A] == b


def test_matrix_json_round_trip():
    M = [[10**30, -1], [0, 7]]
    text = matrix_to_json(M)
    assert '"1000000000000000000000000000000"' in text
    assert matrix_from_json(text) == M
