import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import frac_det, orbit_oracle, perm_sign
from test_linalg import random_unimodular
from sharbly.canonical import (
    DET,
    TRIV,
    UNIT,
    BasicSharbly,
    Element,
    GradeError,
    Sharbly,
    TooWideError,
    basic,
    canonical_form,
    canonicalize,
    element_from,
    random_sharbly,
)
from sharbly.linalg import matmul, transpose

E1, E2 = (1, 0), (0, 1)


def test_rank_one_identity():
    assert canonicalize(basic([(1,)])) == (1, Sharbly(1, ((1,),)))


@pytest.mark.parametrize(
    "cols, chi, nonzero",
    [
        ([E1, (2, 0)], TRIV, False),  # does not span
        ([E1, E2], TRIV, False),  # swapping the columns is a GL element
        ([E1, E2], DET, False),  # diag(-1, 1)
        ([E1, (0, 2)], TRIV, True),
        ([E1, E2, (1, 1)], DET, True),
        ([E1, E2, (1, 1)], TRIV, False),
    ],
)
def test_hand_checked_zero_pattern(cols, chi, nonzero):
    sign, rep = canonicalize(basic(cols, chi))
    assert (sign != 0) == nonzero
    assert (rep is not None) == nonzero
    assert orbit_oracle(2, chi, tuple(cols)) == (sign, rep.cols if rep else None)


def test_degenerate_columns_vanish():
    assert canonicalize(basic([E1, E2, (-1, 0)])) == (0, None)
    assert canonicalize(basic([E1, (0, 2), (0, 2)], DET)) == (0, None)


def test_unit_and_rank_zero():
    assert canonical_form(0, TRIV, ()) == (1, UNIT)
    assert canonical_form(0, DET, ()) == (1, UNIT)


def test_representative_is_fixed_point():
    for seed in range(30):
        x = random_sharbly(2, 2, 3, seed, TRIV)
        sign, rep = canonicalize(x)
        if sign:
            assert canonical_form(rep.n, TRIV, rep.cols) == (1, rep)


@pytest.mark.parametrize("bad", [
    dict(n=2, chi=TRIV, cols=((1, 0),)),
    dict(n=2, chi=TRIV, cols=((1, 0), (0, 0))),
    dict(n=2, chi=TRIV, cols=((1, 0), (0, 1, 0))),
    dict(n=2, chi=3, cols=((1, 0), (0, 1))),
])
def test_malformed_basic_sharbly(bad):
    with pytest.raises(ValueError):
        BasicSharbly(**bad)


def test_width_cap(monkeypatch):
    x = random_sharbly(2, 3, 5, 1)
    monkeypatch.setenv("SHARBLY_MAX_COLS", "4")
    canonical_form.cache_clear()
    with pytest.raises(TooWideError):
        canonical_form(x.n, x.chi, x.cols)
    canonical_form.cache_clear()


def signed_permutation_action(cols, perm, signs):
    return tuple(tuple(s * v for v in cols[i]) for i, s in zip(perm, signs))


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 3),
    st.integers(0, 3),
    st.sampled_from([TRIV, DET]),
    st.integers(0, 10**9),
)
def test_orbit_invariance(n, k, chi, seed):
    rng = random.Random(seed)
    x = random_sharbly(n, k, 3, rng, chi)
    sign, rep = canonicalize(x)
    m = n + k
    U = random_unimodular(rng, n)
    perm = list(range(m))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(m)]
    moved = signed_permutation_action(x.cols, perm, signs)
    moved = tuple(map(tuple, transpose(matmul(U, transpose(moved)))))
    sign2, rep2 = canonical_form(n, chi, moved)
    assert rep2 == rep
    twist = frac_det(U) if chi == DET else 1
    assert sign2 == sign * perm_sign(perm) * twist


# small exhaustive cross-check; the full sweep lives in test_acceptance
def _small_cases():
    vecs = [(1,), (2,)]
    for m in (1, 2):
        for cols in combinations(vecs, m):
            yield 1, cols
    vecs = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)]
    for m in (2, 3):
        for cols in combinations(vecs, m):
            yield 2, cols


@pytest.mark.parametrize("n, cols", list(_small_cases()))
@pytest.mark.parametrize("chi", [TRIV, DET])
def test_agrees_with_exhaustive_oracle(n, cols, chi):
    sign, rep = canonical_form(n, chi, cols)
    assert orbit_oracle(n, chi, cols) == (sign, rep.cols if rep else None)


def test_det_character_vanishes_in_odd_rank():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.choice((1, 3))
        x = random_sharbly(n, rng.randint(0, 3), 3, rng, DET)
        assert canonicalize(x) == (0, None)


def test_element_from_single_term():
    x = element_from([(1, basic([E1, (0, 2)]))])
    assert len(x.terms) == 1 and x.grade == (2, 0)


def test_element_from_antisymmetry():
    cols = [(1, 0), (0, 2), (1, 3)]
    swapped = [cols[1], cols[0], cols[2]]
    x = element_from([(1, basic(cols)), (1, basic(swapped))])
    assert x.is_zero()


def test_element_from_collects_coefficients():
    y = basic([E1, (0, 2)])
    x = element_from([(Fraction(3, 2), y), (Fraction(-1, 2), y)])
    assert list(x.terms.values()) == [1]


def test_element_from_rejects_mixed_grades():
    with pytest.raises(GradeError):
        element_from([(1, basic([E1, (0, 2)])), (1, basic([(1,)]))])
    with pytest.raises(GradeError):
        element_from([(1, basic([E1, (0, 2)])), (1, basic([E1, (0, 2)], DET))])


def test_element_arithmetic():
    y = element_from([(1, basic([E1, (0, 2)]))])
    assert (y + y) == 2 * y
    assert (y - y).is_zero()
    assert -(-y) == y
    with pytest.raises(GradeError):
        y + Element.unit(TRIV)


def test_random_sharbly_determinism():
    a = random_sharbly(3, 2, 4, 123)
    assert a == random_sharbly(3, 2, 4, 123)
    assert a != random_sharbly(3, 2, 4, 124)
    for seed in range(20):
        x = random_sharbly(2, 3, 2, seed)
        assert all(abs(v) <= 2 for c in x.cols for v in c)
        assert all(any(c) for c in x.cols)
        assert x.n == 2 and x.k == 3
