"""Randomized exact checks of the dg bialgebra identities.

Samples are generated by ``random.Random`` (Mersenne Twister MT19937)
seeded with the string ``"{seed}:{axiom}:{chi}:{index}"``, so every sample
is reproducible on its own. Bounds apply to every element that gets
canonicalized: for the two-argument axioms the ranks and the ``k`` of the
two factors add up to at most ``max_n`` and ``max_k``.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import bialgebra as bi
from .canonical import CHI_NAMES, Element, canonicalize, chi_value, random_sharbly
from .io import element_to_dict, tensor_to_dict

AXIOMS = ("d2", "leibniz", "comm", "coassoc", "coleibniz", "compat", "counit", "antipode")


@dataclass
class VerifyReport:
    axiom: str
    samples: int
    seed: int
    chi: str
    bounds: dict
    passed: bool
    counterexample: Optional[dict] = None
    wall_time: float = 0.0
    nonzero_samples: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def random_element(rng: random.Random, n: int, k: int, chi: int, entry_bound: int, max_terms: int = 2) -> Element:
    """Combination of up to ``max_terms`` random sharblies with small coefficients.

    Each term is resampled a few times to dodge zeros; grades where every
    sharbly vanishes give the zero element.
    """
    x = Element.zero(n, k, chi)
    for _ in range(rng.randint(1, max_terms)):
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
        for _ in range(8):
            sign, rep = canonicalize(random_sharbly(n, k, entry_bound, rng, chi))
            if sign:
                x = x + Element.from_sharbly(rep, chi, sign * coeff)
                break
    return x


def _grade(rng, max_n, max_k):
    return rng.randint(1, max_n), rng.randint(0, max_k)


def _split_grades(rng, max_n, max_k):
    n1 = rng.randint(1, max(1, max_n - 1))
    n2 = rng.randint(1, max(1, max_n - n1))
    k1 = rng.randint(0, max_k)
    k2 = rng.randint(0, max_k - k1)
    return (n1, k1), (n2, k2)


def _elt(x: Element) -> dict:
    return element_to_dict(x)


def _tensor_dict(terms: dict) -> list:
    return [
        {"coeff": str(c), "factors": [{"n": s.n, "cols": [list(col) for col in s.cols]} for s in key]}
        for key, c in sorted(terms.items())
    ]


def _accumulate(acc: dict, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _triple_left(x: Element) -> dict:
    acc: dict = {}
    for (a, b), c in bi.coproduct(x).terms.items():
        for (a1, a2), d in bi.coproduct(Element.from_sharbly(a, x.chi)).terms.items():
            _accumulate(acc, (a1, a2, b), c * d)
    return acc


def _triple_right(x: Element) -> dict:
    acc: dict = {}
    for (a, b), c in bi.coproduct(x).terms.items():
        for (b1, b2), d in bi.coproduct(Element.from_sharbly(b, x.chi)).terms.items():
            _accumulate(acc, (a, b1, b2), c * d)
    return acc


def check_d2(x: Element):
    lhs = bi.boundary(bi.boundary(x))
    return lhs.is_zero(), {"x": _elt(x), "d(d(x))": _elt(lhs)}


def check_leibniz(x: Element, y: Element):
    lhs = bi.boundary(bi.product(x, y))
    rhs = bi.product(bi.boundary(x), y) + (-1) ** x.degree * bi.product(x, bi.boundary(y))
    return lhs == rhs, {"x": _elt(x), "y": _elt(y), "lhs": _elt(lhs), "rhs": _elt(rhs)}


def check_comm(x: Element, y: Element):
    lhs = bi.product(x, y)
    rhs = (-1) ** (x.degree * y.degree) * bi.product(y, x)
    return lhs == rhs, {"x": _elt(x), "y": _elt(y), "lhs": _elt(lhs), "rhs": _elt(rhs)}


def check_coassoc(x: Element):
    lhs, rhs = _triple_left(x), _triple_right(x)
    return lhs == rhs, {"x": _elt(x), "lhs": _tensor_dict(lhs), "rhs": _tensor_dict(rhs)}


def check_coleibniz(x: Element):
    lhs = bi.coproduct(bi.boundary(x))
    acc: dict = {}
    for (a, b), c in bi.coproduct(x).terms.items():
        ea, eb = Element.from_sharbly(a, x.chi), Element.from_sharbly(b, x.chi)
        for da, e in bi.boundary(ea).terms.items():
            _accumulate(acc, (da, b), c * e)
        sign = -1 if a.degree % 2 else 1
        for db, e in bi.boundary(eb).terms.items():
            _accumulate(acc, (a, db), sign * c * e)
    rhs = bi.TensorElement(x.chi, acc)
    return lhs == rhs, {"x": _elt(x), "lhs": tensor_to_dict(lhs), "rhs": tensor_to_dict(rhs)}


def check_compat(x: Element, y: Element):
    lhs = bi.coproduct(bi.product(x, y))
    acc: dict = {}
    dy = bi.coproduct(y).terms
    for (a, b), c in bi.coproduct(x).terms.items():
        for (p, q), d in dy.items():
            sign = -1 if b.degree * p.degree % 2 else 1
            s1, left = bi._product(x.chi, a, p)
            if not s1:
                continue
            s2, right = bi._product(x.chi, b, q)
            if not s2:
                continue
            _accumulate(acc, (left, right), sign * s1 * s2 * c * d)
    rhs = bi.TensorElement(x.chi, acc)
    return lhs == rhs, {"x": _elt(x), "y": _elt(y), "lhs": tensor_to_dict(lhs), "rhs": tensor_to_dict(rhs)}


def check_counit(x: Element):
    left = Element.zero(x.n, x.k, x.chi)
    right = Element.zero(x.n, x.k, x.chi)
    for (a, b), c in bi.coproduct(x).terms.items():
        if a.is_unit():
            left = left + Element.from_sharbly(b, x.chi, c)
        if b.is_unit():
            right = right + Element.from_sharbly(a, x.chi, c)
    ok = left == x and right == x
    return ok, {"x": _elt(x), "(eps x id)D(x)": _elt(left), "(id x eps)D(x)": _elt(right)}


def check_antipode(x: Element):
    expected = bi.counit(x)
    d = bi.coproduct(x)
    left = Element.zero(x.n, x.k, x.chi)
    right = Element.zero(x.n, x.k, x.chi)
    for (a, b), c in d.terms.items():
        ea, eb = Element.from_sharbly(a, x.chi), Element.from_sharbly(b, x.chi)
        left = left + c * bi.product(bi.antipode(ea), eb)
        right = right + c * bi.product(ea, bi.antipode(eb))
    if x.degree:
        ok = left.is_zero() and right.is_zero()
    else:
        one = Element.unit(x.chi) * expected
        ok = left == one and right == one
    return ok, {"x": _elt(x), "m(S x id)D(x)": _elt(left), "m(id x S)D(x)": _elt(right)}


CHECKS: dict[str, Callable] = {
    "d2": check_d2,
    "leibniz": check_leibniz,
    "comm": check_comm,
    "coassoc": check_coassoc,
    "coleibniz": check_coleibniz,
    "compat": check_compat,
    "counit": check_counit,
    "antipode": check_antipode,
}
BINARY = {"leibniz", "comm", "compat"}


def sample_inputs(axiom: str, seed: int, index: int, chi: int, max_n: int, max_k: int, entry_bound: int, max_terms: int = 2):
    rng = random.Random(f"{seed}:{axiom}:{CHI_NAMES[chi]}:{index}")
    if axiom in BINARY:
        (n1, k1), (n2, k2) = _split_grades(rng, max_n, max_k)
        return (
            random_element(rng, n1, k1, chi, entry_bound, max_terms),
            random_element(rng, n2, k2, chi, entry_bound, max_terms),
        )
    n, k = _grade(rng, max_n, max_k)
    return (random_element(rng, n, k, chi, entry_bound, max_terms),)


def verify(
    axiom: str,
    samples: int = 1000,
    seed: int = 42,
    max_n: int = 4,
    max_k: int = 3,
    entry_bound: int = 3,
    chi="triv",
    max_terms: int = 2,
) -> VerifyReport:
    """Check one identity on ``samples`` seeded random inputs, stopping at the first failure."""
    if axiom not in CHECKS:
        raise ValueError(f"unknown axiom {axiom!r}; choose from {', '.join(AXIOMS)}")
    if min(samples, max_n, entry_bound) < 1 or max_k < 0:
        raise ValueError("bounds must be positive")
    chi = chi_value(chi)
    check = CHECKS[axiom]
    start = time.perf_counter()
    report = VerifyReport(
        axiom=axiom,
        samples=samples,
        seed=seed,
        chi=CHI_NAMES[chi],
        bounds={"max_n": max_n, "max_k": max_k, "entry_bound": entry_bound, "max_terms": max_terms},
        passed=True,
    )
    for i in range(samples):
        args = sample_inputs(axiom, seed, i, chi, max_n, max_k, entry_bound, max_terms)
        report.nonzero_samples += all(not a.is_zero() for a in args)
        ok, witness = check(*args)
        if not ok:
            report.passed = False
            report.counterexample = {"index": i, **witness}
            break
    report.wall_time = time.perf_counter() - start
    return report
