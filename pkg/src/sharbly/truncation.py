"""Finite subcomplexes spanned by sharblies on a fixed pool of vectors.

Deleting a column keeps a sharbly on the pool, so these are genuine
subcomplexes. Their homology is an exploratory approximation of the full
coinvariant homology; nothing here claims convergence as the pool grows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .bialgebra import _boundary, boundary
from .canonical import Element, Sharbly, canonical_form, chi_value
from .linalg import rank_rational, solve_rational, transpose

DEFAULT_MAX_SUBSETS = 200_000


class ComplexTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class VectorPool:
    """Nonzero vectors of ``Z^n``, at most one from each ``{v, -v}``."""

    n: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen, kept = set(), []
        for v in self.vectors:
            v = tuple(int(x) for x in v)
            if len(v) != self.n:
                raise ValueError(f"pool vector {v} does not have length {self.n}")
            if not any(v):
                raise ValueError("pool vectors must be nonzero")
            key = max(v, tuple(-x for x in v))
            if key not in seen:
                seen.add(key)
                kept.append(v)
        object.__setattr__(self, "vectors", tuple(kept))

    def __len__(self):
        return len(self.vectors)


@dataclass
class TruncatedComplex:
    n: int
    chi: int
    pool: VectorPool
    max_k: int
    bases: list[list[Sharbly]]
    # boundaries[k] is the matrix of d: C_k -> C_{k-1}; boundaries[0] is empty
    boundaries: list[list[list[int]]]
    sources: list[list[tuple[int, ...]]] = field(default_factory=list)

    def index(self, k: int) -> dict[Sharbly, int]:
        return {s: i for i, s in enumerate(self.bases[k])}

    @property
    def chain_dims(self) -> list[int]:
        return [len(b) for b in self.bases]


def _basis(n: int, chi: int, pool: VectorPool, k: int):
    basis: dict[Sharbly, tuple[int, ...]] = {}
    for idx in combinations(range(len(pool)), n + k):
        sign, rep = canonical_form(n, chi, tuple(pool.vectors[i] for i in idx))
        if sign and rep not in basis:
            basis[rep] = idx
    return list(basis), list(basis.values())


def _boundary_matrix(chi: int, rows: list[Sharbly], cols: list[Sharbly]) -> list[list[int]]:
    index = {s: i for i, s in enumerate(rows)}
    D = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for t, e in _boundary(chi, s):
            try:
                D[index[t]][j] += e
            except KeyError:
                raise AssertionError(f"face {t!r} of {s!r} escapes the pool subcomplex") from None
    return D


def _check_size(pool: VectorPool, n: int, ks, cap: int):
    total = sum(comb(len(pool), n + k) for k in ks)
    if total > cap:
        raise ComplexTooLarge(f"{total} column selections exceed the cap of {cap}")


def build_complex(n: int, chi, pool: VectorPool, max_k: int, max_subsets: int = DEFAULT_MAX_SUBSETS) -> TruncatedComplex:
    """Bases for ``0 <= k <= max_k`` and the boundary matrices between them."""
    chi = chi_value(chi)
    if pool.n != n:
        raise ValueError(f"pool has rank {pool.n}, expected {n}")
    _check_size(pool, n, range(max_k + 1), max_subsets)
    bases, sources = [], []
    for k in range(max_k + 1):
        b, src = _basis(n, chi, pool, k)
        bases.append(b)
        sources.append(src)
    boundaries = [[]] + [_boundary_matrix(chi, bases[k - 1], bases[k]) for k in range(1, max_k + 1)]
    return TruncatedComplex(n, chi, pool, max_k, bases, boundaries, sources)


def _rank(D: list[list[int]]) -> int:
    return rank_rational(D) if D and D[0] else 0


def homology_dims(c: TruncatedComplex) -> list[int]:
    """``dim ker d_k - rank d_(k+1)`` for ``0 <= k < max_k``."""
    ranks = [0] + [_rank(c.boundaries[k]) for k in range(1, c.max_k + 1)]
    return [len(c.bases[k]) - ranks[k] - ranks[k + 1] for k in range(c.max_k)]


def find_boundary_witness(
    y: Element,
    pool: VectorPool,
    search_k: Optional[int] = None,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
) -> Optional[Element]:
    """Some ``x`` on the pool with ``boundary(x) == y``, or ``None``.

    ``None`` only means the pool is too small to exhibit a witness.
    """
    k = y.k
    if search_k is None:
        search_k = k + 1
    if search_k != k + 1:
        raise ValueError("the boundary lowers k by one; search_k must be y.k + 1")
    if pool.n != y.n:
        raise ValueError(f"pool has rank {pool.n}, element has rank {y.n}")
    if y.is_zero():
        return Element.zero(y.n, search_k, y.chi)
    _check_size(pool, y.n, (k, search_k), max_subsets)
    rows, _ = _basis(y.n, y.chi, pool, k)
    cols, _ = _basis(y.n, y.chi, pool, search_k)
    index = {s: i for i, s in enumerate(rows)}
    b = [Fraction(0)] * len(rows)
    for s, c in y.terms.items():
        if s not in index:
            raise ValueError(f"target term {s!r} is not supported on the pool")
        b[index[s]] = c
    if not cols:
        return None
    D = _boundary_matrix(y.chi, rows, cols)
    sol = solve_rational(D, b)
    if sol is None:
        return None
    x = Element(y.n, search_k, y.chi, {s: v for s, v in zip(cols, sol)})
    if boundary(x) != y:
        raise AssertionError("assembled boundary matrix disagrees with the element boundary")
    return x


def pool_from_vectors(vectors: Sequence[Sequence[int]], n: Optional[int] = None) -> VectorPool:
    vectors = [tuple(v) for v in vectors]
    if n is None:
        if not vectors:
            raise ValueError("cannot infer the rank of an empty pool")
        n = len(vectors[0])
    return VectorPool(n, tuple(vectors))
