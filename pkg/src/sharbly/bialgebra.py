"""Differential, product, coproduct, counit and antipode on coinvariant sharblies.

Everything is computed on canonical representatives and extended
(bi)linearly. Koszul signs use the total degree ``n + k``, i.e. the number
of columns of a sharbly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .canonical import (
    CHI_NAMES,
    UNIT,
    Element,
    GradeError,
    Sharbly,
    canonical_form,
)
from .linalg import SaturatedLattice, saturate, transpose, rank_rational, unimodular_completion

Pair = tuple[Sharbly, Sharbly]


class TensorElement:
    """Finite rational combination of pairs of canonical sharblies."""

    __slots__ = ("chi", "terms")

    def __init__(self, chi: int, terms: Optional[dict] = None):
        self.chi = chi
        self.terms: dict[Pair, Fraction] = {p: Fraction(c) for p, c in (terms or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.chi != other.chi:
            raise GradeError("character mismatch")
        terms = dict(self.terms)
        for p, c in other.terms.items():
            terms[p] = terms.get(p, 0) + c
        return TensorElement(self.chi, terms)

    def __neg__(self):
        return TensorElement(self.chi, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return TensorElement(self.chi, {p: c * v for p, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.chi == other.chi and self.terms == other.terms

    def __hash__(self):
        return hash((self.chi, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"TensorElement(0, {CHI_NAMES[self.chi]})"
        body = " + ".join(f"{c}*{a!r}(x){b!r}" for (a, b), c in self.items())
        return f"TensorElement({body}, {CHI_NAMES[self.chi]})"


def tensor(x: Element, y: Element) -> TensorElement:
    if x.chi != y.chi:
        raise GradeError("character mismatch")
    return TensorElement(x.chi, {(a, b): c * d for a, c in x.terms.items() for b, d in y.terms.items()})


def _add_term(acc: dict, key, coeff):
    v = acc.get(key, 0) + coeff
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


@lru_cache(maxsize=1 << 16)
def _boundary(chi: int, s: Sharbly) -> tuple[tuple[Sharbly, int], ...]:
    acc: dict[Sharbly, int] = {}
    cols = s.cols
    for i in range(len(cols)):
        sign, rep = canonical_form(s.n, chi, cols[:i] + cols[i + 1:])
        if sign:
            # (-1)^i with positions counted from 1
            _add_term(acc, rep, sign * (-1 if i % 2 == 0 else 1))
    return tuple(sorted(acc.items()))


def boundary(x: Element) -> Element:
    """Alternating face sum; lands in grade ``(n, k - 1)``."""
    acc: dict[Sharbly, Fraction] = {}
    if x.k > 0:
        for s, c in x.terms.items():
            for t, e in _boundary(x.chi, s):
                _add_term(acc, t, c * e)
    return Element(x.n, x.k - 1, x.chi, acc)


def embed(s: Sharbly, t: Sharbly) -> tuple[tuple[int, ...], ...]:
    """Columns of ``s`` in the first coordinates, then ``t`` in the last ones."""
    zs, zt = (0,) * t.n, (0,) * s.n
    return tuple(c + zs for c in s.cols) + tuple(zt + c for c in t.cols)


@lru_cache(maxsize=1 << 16)
def _product(chi: int, s: Sharbly, t: Sharbly) -> tuple[int, Optional[Sharbly]]:
    if s.is_unit():
        return 1, t
    if t.is_unit():
        return 1, s
    return canonical_form(s.n + t.n, chi, embed(s, t))


def product(x: Element, y: Element) -> Element:
    """Block-diagonal juxtaposition, bilinearly extended."""
    if x.chi != y.chi:
        raise GradeError("character mismatch in product")
    acc: dict[Sharbly, Fraction] = {}
    for s, c in x.terms.items():
        for t, d in y.terms.items():
            sign, rep = _product(x.chi, s, t)
            if sign:
                _add_term(acc, rep, sign * c * d)
    return Element(x.n + y.n, x.k + y.k, x.chi, acc)


@dataclass(frozen=True)
class SubspaceRecord:
    """One summand of the coproduct of a basic sharbly.

    ``lattice`` is ``V & Z^n``, ``member_positions`` the (0-based) columns
    lying in ``V`` and ``shuffle_sign`` the sign of the shuffle putting them
    first. ``left``/``right`` are the raw factor columns in the coordinates
    fixed by ``unimodular_completion``.
    """

    lattice: SaturatedLattice
    member_positions: tuple[int, ...]
    shuffle_sign: int
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]


def _flats(cols: tuple[tuple[int, ...], ...], n: int) -> list[frozenset]:
    """Index sets ``{i : v_i in V}`` for every ``V`` spanned by some columns."""
    m = len(cols)

    def closure(idx):
        base = [cols[i] for i in idx]
        r = rank_rational(transpose(base)) if base else 0
        return frozenset(
            i for i in range(m) if i in idx or rank_rational(transpose(base + [cols[i]])) == r
        )

    start = frozenset()
    seen = {start}
    queue = [start]
    while queue:
        F = queue.pop()
        for i in range(m):
            if i not in F:
                G = closure(F | {i})
                if G not in seen:
                    seen.add(G)
                    queue.append(G)
    return sorted(seen, key=lambda F: (len(F), sorted(F)))


def subspace_records(s: Sharbly) -> Iterator[SubspaceRecord]:
    """The subspaces ``V`` spanned by subsets of the columns, with their data."""
    n, cols = s.n, s.cols
    m = len(cols)
    for F in _flats(cols, n):
        members = tuple(sorted(F))
        others = tuple(i for i in range(m) if i not in F)
        L = saturate([cols[i] for i in members], n)
        U, d = unimodular_completion(L)
        assert d == 1 or L.rank == n
        a = L.rank
        left = tuple(tuple(sum(x * y for x, y in zip(row, cols[i])) for row in U[:a]) for i in members)
        right = tuple(tuple(sum(x * y for x, y in zip(row, cols[j])) for row in U[a:]) for j in others)
        crossings = sum(1 for i in members for j in others if j < i)
        yield SubspaceRecord(L, members, -1 if crossings & 1 else 1, left, right)


@lru_cache(maxsize=1 << 15)
def _coproduct(chi: int, s: Sharbly) -> tuple[tuple[Pair, int], ...]:
    if s.is_unit():
        return (((UNIT, UNIT), 1),)
    acc: dict[Pair, int] = {}
    for rec in subspace_records(s):
        a = rec.lattice.rank
        ls, lrep = canonical_form(a, chi, rec.left)
        if not ls:
            continue
        rs, rrep = canonical_form(s.n - a, chi, rec.right)
        if not rs:
            continue
        _add_term(acc, (lrep, rrep), rec.shuffle_sign * ls * rs)
    return tuple(sorted(acc.items()))


def coproduct(x: Element) -> TensorElement:
    acc: dict[Pair, Fraction] = {}
    for s, c in x.terms.items():
        for p, e in _coproduct(x.chi, s):
            _add_term(acc, p, c * e)
    return TensorElement(x.chi, acc)


def reduced_coproduct(x: Element) -> TensorElement:
    """``coproduct(x) - x (x) 1 - 1 (x) x``."""
    one = Element.unit(x.chi)
    return coproduct(x) - tensor(x, one) - tensor(one, x)


def counit(x: Element) -> Fraction:
    """Coefficient of the unit; zero in positive degree."""
    if x.degree:
        return Fraction(0)
    return x.terms.get(UNIT, Fraction(0))


def tensor_swap(t: TensorElement) -> TensorElement:
    """``a (x) b -> (-1)^(|a||b|) b (x) a`` with total degrees."""
    acc = {}
    for (a, b), c in t.terms.items():
        _add_term(acc, (b, a), -c if a.degree * b.degree % 2 else c)
    return TensorElement(t.chi, acc)


def multiply_pairs(t: TensorElement, n: int, k: int) -> Element:
    """Apply the product to every pair, collecting into grade ``(n, k)``."""
    acc: dict[Sharbly, Fraction] = {}
    for (a, b), c in t.terms.items():
        sign, rep = _product(t.chi, a, b)
        if sign:
            _add_term(acc, rep, sign * c)
    return Element(n, k, t.chi, acc)


@lru_cache(maxsize=1 << 15)
def _antipode(chi: int, s: Sharbly) -> Element:
    x = Element.from_sharbly(s, chi)
    if s.is_unit():
        return x
    out = -x
    for (a, b), c in reduced_coproduct(x).terms.items():
        out = out - c * product(_antipode(chi, a), Element.from_sharbly(b, chi))
    return out


def antipode(x: Element) -> Element:
    """Antipode by the recursion ``S(x) = -x - sum S(x') x''`` over the reduced coproduct."""
    out = Element.zero(x.n, x.k, x.chi)
    for s, c in x.terms.items():
        out = out + c * _antipode(x.chi, s)
    return out


def is_primitive(x: Element) -> bool:
    return reduced_coproduct(x).is_zero()
