"""Coinvariant sharblies as canonical integer matrices.

A basic sharbly of rank ``n`` is an ordered list of nonzero vectors in
``Z^n``. It is antisymmetric in its columns, blind to the sign of any single
column, and after passing to ``GL_n(Z)`` coinvariants it satisfies
``[g v] = chi(det g) [v]``. ``canonical_form`` picks one representative per
orbit and reports the sign relating the input to it, or detects that the
orbit annihilates itself.

Representative: over all column orders and column signs, take the row HNF
``H`` of the rearranged matrix and minimise the key
``((inv(c_1), H[:, 1]), (inv(c_2), H[:, 2]), ...)`` lexicographically, where
``inv`` is an orbit invariant of the original column. The HNF of a column
prefix is the prefix of the HNF, so the search extends prefixes level by
level and only keeps those tied for the minimum.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence, Union

from .linalg import det, extend_hnf, identity, rank_rational, transpose

TRIV = 1
DET = -1
CHI_NAMES = {TRIV: "triv", DET: "det"}
CHI_BY_NAME = {"triv": TRIV, "det": DET}

DEFAULT_MAX_COLS = 9

Column = tuple[int, ...]


class GradeError(ValueError):
    """Operands live in incompatible grades or characters."""


class TooWideError(ValueError):
    """Sharbly has more columns than the canonicalization cap allows."""


def max_cols() -> int:
    return int(os.environ.get("SHARBLY_MAX_COLS", DEFAULT_MAX_COLS))


def chi_value(chi: Union[int, str]) -> int:
    if isinstance(chi, str):
        try:
            return CHI_BY_NAME[chi]
        except KeyError:
            raise ValueError(f"unknown character {chi!r}") from None
    if chi not in (TRIV, DET):
        raise ValueError(f"character value must be +1 or -1, got {chi!r}")
    return chi


@dataclass(frozen=True)
class BasicSharbly:
    """``[v_1, ..., v_{n+k}]^chi`` before taking coinvariants."""

    n: int
    chi: int
    cols: tuple[Column, ...]

    def __post_init__(self):
        object.__setattr__(self, "chi", chi_value(self.chi))
        object.__setattr__(self, "cols", tuple(tuple(int(x) for x in c) for c in self.cols))
        if self.n < 0:
            raise ValueError("rank must be nonnegative")
        if len(self.cols) < self.n:
            raise ValueError(f"need at least {self.n} columns, got {len(self.cols)}")
        for c in self.cols:
            if len(c) != self.n:
                raise ValueError(f"column {c} does not have length {self.n}")
            if not any(c):
                raise ValueError("columns must be nonzero")

    @property
    def k(self) -> int:
        return len(self.cols) - self.n


@dataclass(frozen=True, order=True)
class Sharbly:
    """Canonical representative of a nonzero basic coinvariant sharbly.

    ``cols`` are the columns of the canonical HNF matrix. The rank-0 empty
    sharbly is the unit.
    """

    n: int
    cols: tuple[Column, ...]

    @property
    def k(self) -> int:
        return len(self.cols) - self.n

    @property
    def degree(self) -> int:
        return len(self.cols)

    def is_unit(self) -> bool:
        return self.n == 0

    def __repr__(self):
        return f"[{', '.join(str(list(c)) for c in self.cols)}]_{self.n}"


UNIT = Sharbly(0, ())


def column_invariants(cols: Sequence[Column], n: int) -> list[tuple]:
    """Per-column invariants under ``GL_n(Z)``, column signs and reordering.

    Content of the column, then the sorted absolute maximal minors through it.
    """
    m = len(cols)
    minors: list[list[int]] = [[] for _ in range(m)]
    for idx in combinations(range(m), n):
        d = abs(det(transpose([cols[i] for i in idx])))
        for i in idx:
            minors[i].append(d)
    return [(gcd(*c), tuple(sorted(ms))) for c, ms in zip(cols, minors)]


def _perm_sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv & 1 else 1


def _degenerate(cols: Sequence[Column]) -> bool:
    seen = set()
    for c in cols:
        key = max(c, tuple(-x for x in c))
        if key in seen:
            return True
        seen.add(key)
    return False


def _search(n: int, chi: int, cols: tuple[Column, ...]):
    """Minimal key over the orbit and the tracked signs reaching it."""
    m = len(cols)
    inv = column_invariants(cols, n)
    neg = [tuple(-x for x in c) for c in cols]
    # Fixing the first column's sign is harmless: -id flips every sign and
    # multiplies the tracked sign by chi(-1)^n, which is 1 on this path.
    states = [(identity(n), 1, 0, (), 0)]
    hcols = []
    for level in range(m):
        best = None
        ties = []
        for st in states:
            U, _, r, _, used = st
            rem = [i for i in range(m) if not used >> i & 1]
            lo = min(inv[i] for i in rem)
            for i in rem:
                if inv[i] != lo:
                    continue
                for col in (cols[i],) if level == 0 else (cols[i], neg[i]):
                    u = [sum(a * x for a, x in zip(row, col)) for row in U]
                    if r < n and any(u[r:]):
                        g = gcd(*u[r:])
                        h = tuple(x % g for x in u[:r]) + (g,) + (0,) * (n - r - 1)
                    else:
                        h = tuple(u)
                    if best is None or h < best:
                        best, ties = h, [(st, i, col)]
                    elif h == best:
                        ties.append((st, i, col))
        states = []
        for (U, d, r, perm, used), i, col in ties:
            U2, d2, r2, _ = extend_hnf(U, d, r, col)
            states.append((U2, d2, r2, perm + (i,), used | 1 << i))
        hcols.append(best)
    signs = {_perm_sign(perm) * (d if chi == DET else 1) for _, d, _, perm, _ in states}
    return tuple(hcols), signs


@lru_cache(maxsize=1 << 18)
def canonical_form(n: int, chi: int, cols: tuple[Column, ...]) -> tuple[int, Optional[Sharbly]]:
    """``(sign, rep)`` with ``[cols]^chi == sign * rep`` in the coinvariants.

    Returns ``(0, None)`` when the coinvariant sharbly vanishes. Expects
    validated input (see ``BasicSharbly``).
    """
    m = len(cols)
    if n == 0:
        return (1, UNIT) if m == 0 else (0, None)
    if m < n or _degenerate(cols) or rank_rational(transpose(cols)) < n:
        return 0, None
    if chi == DET and n % 2:
        return 0, None
    cap = max_cols()
    if m > cap:
        raise TooWideError(f"{m} columns exceeds SHARBLY_MAX_COLS={cap}")
    hcols, signs = _search(n, chi, cols)
    if len(signs) > 1:
        return 0, None
    return signs.pop(), Sharbly(n, hcols)


def canonicalize(x: BasicSharbly) -> tuple[int, Optional[Sharbly]]:
    return canonical_form(x.n, x.chi, x.cols)


Scalar = Union[int, Fraction]


class Element:
    """Finite rational combination of canonical sharblies of one bigrade."""

    __slots__ = ("n", "k", "chi", "terms")

    def __init__(self, n: int, k: int, chi: int, terms: Optional[dict] = None):
        self.n = n
        self.k = k
        self.chi = chi_value(chi)
        self.terms: dict[Sharbly, Fraction] = {}
        for s, c in (terms or {}).items():
            if s.n != n or s.k != k:
                raise GradeError(f"term {s!r} is not in grade ({n}, {k})")
            if c:
                self.terms[s] = Fraction(c)

    @classmethod
    def zero(cls, n: int, k: int, chi: int) -> "Element":
        return cls(n, k, chi)

    @classmethod
    def unit(cls, chi: int) -> "Element":
        return cls(0, 0, chi, {UNIT: 1})

    @classmethod
    def from_sharbly(cls, s: Sharbly, chi: int, coeff: Scalar = 1) -> "Element":
        return cls(s.n, s.k, chi, {s: coeff})

    @property
    def grade(self) -> tuple[int, int]:
        return self.n, self.k

    @property
    def degree(self) -> int:
        return self.n + self.k

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def _check(self, other: "Element"):
        if (self.n, self.k, self.chi) != (other.n, other.k, other.chi):
            raise GradeError(
                f"grade mismatch: ({self.n}, {self.k}, {CHI_NAMES[self.chi]}) vs "
                f"({other.n}, {other.k}, {CHI_NAMES[other.chi]})"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return Element(self.n, self.k, self.chi, terms)

    def __neg__(self) -> "Element":
        return Element(self.n, self.k, self.chi, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, c: Scalar) -> "Element":
        if not isinstance(c, (int, Fraction)):
            return NotImplemented
        return Element(self.n, self.k, self.chi, {s: c * v for s, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (self.n, self.k, self.chi, self.terms) == (other.n, other.k, other.chi, other.terms)

    def __hash__(self):
        return hash((self.n, self.k, self.chi, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"Element(0 in ({self.n}, {self.k}), {CHI_NAMES[self.chi]})"
        body = " + ".join(f"{c}*{s!r}" for s, c in self.items())
        return f"Element({body}, {CHI_NAMES[self.chi]})"


def element_from(
    terms: Iterable[tuple[Scalar, BasicSharbly]],
    n: Optional[int] = None,
    k: Optional[int] = None,
    chi: Optional[int] = None,
) -> Element:
    """Canonicalize basic sharblies and collect them into an ``Element``.

    The grade comes from the terms; pass ``n``, ``k`` and ``chi`` to build
    an empty combination or to pin the grade.
    """
    acc: dict[Sharbly, Fraction] = {}
    for coeff, x in terms:
        n = x.n if n is None else n
        k = x.k if k is None else k
        chi = x.chi if chi is None else chi_value(chi)
        if (x.n, x.k, x.chi) != (n, k, chi):
            raise GradeError(f"mixed grades: ({x.n}, {x.k}, {x.chi}) vs ({n}, {k}, {chi})")
        sign, rep = canonicalize(x)
        if sign:
            acc[rep] = acc.get(rep, 0) + sign * Fraction(coeff)
    if n is None or k is None or chi is None:
        raise ValueError("cannot infer the grade of an empty combination")
    return Element(n, k, chi, acc)


def basic(cols: Sequence[Sequence[int]], chi: Union[int, str] = TRIV, n: Optional[int] = None) -> BasicSharbly:
    """Shorthand: ``basic([[1, 0], [0, 2]])`` is ``[e1, 2e2]^triv``."""
    cols = tuple(tuple(c) for c in cols)
    if n is None:
        n = len(cols[0]) if cols else 0
    return BasicSharbly(n, chi_value(chi), cols)


def sharbly_element(cols: Sequence[Sequence[int]], chi: Union[int, str] = TRIV, coeff: Scalar = 1) -> Element:
    """The ``Element`` ``coeff * [cols]^chi``."""
    return element_from([(coeff, basic(cols, chi))])


def random_sharbly(
    n: int,
    k: int,
    entry_bound: int,
    seed: Union[int, str, random.Random],
    chi: Union[int, str] = TRIV,
) -> BasicSharbly:
    """Uniform random columns with entries in ``[-entry_bound, entry_bound]``.

    ``seed`` may be a ``random.Random`` instance, which is then advanced.
    """
    if n < 1 or k < 0 or entry_bound < 1:
        raise ValueError("need n >= 1, k >= 0, entry_bound >= 1")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    cols = []
    while len(cols) < n + k:
        c = tuple(rng.randint(-entry_bound, entry_bound) for _ in range(n))
        if any(c):
            cols.append(c)
    return BasicSharbly(n, chi_value(chi), tuple(cols))
