"""Exact integer and rational linear algebra.

Matrices are plain sequences of rows holding Python ints (or ``Fraction``
where noted). Nothing here touches floating point.

The Hermite normal form convention is row style: ``H = U @ M`` with ``U``
unimodular, the pivot of each row strictly right of the one above, pivots
positive and entries above a pivot reduced into ``[0, pivot)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

Matrix = Sequence[Sequence[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Matrix, ncols: Optional[int] = None) -> list[list[int]]:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A: Matrix, B: Matrix) -> list[list[int]]:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def extend_hnf(U: list[list[int]], det: int, r: int, column: Sequence[int]):
    """Append one column to a row-HNF computation in progress.

    ``U`` is the unimodular transform accumulated so far, ``det`` its
    determinant and ``r`` the current rank. Returns ``(U, det, r, hcol)``
    where ``hcol`` is the new column of ``H``. ``U`` is copied before being
    modified, so callers may share it between branches.
    """
    n = len(U)
    u = [sum(a * x for a, x in zip(row, column)) for row in U]
    if r == n or not any(u[r:]):
        return U, det, r, tuple(u)
    U = [row[:] for row in U]
    for i in range(r + 1, n):
        b = u[i]
        if not b:
            continue
        a = u[r]
        g, s, t = xgcd(a, b)
        p, q = -b // g, a // g
        Ur, Ui = U[r], U[i]
        U[r] = [s * x + t * y for x, y in zip(Ur, Ui)]
        U[i] = [p * x + q * y for x, y in zip(Ur, Ui)]
        u[r], u[i] = g, 0
    if u[r] < 0:
        U[r] = [-x for x in U[r]]
        u[r] = -u[r]
        det = -det
    g = u[r]
    for i in range(r):
        q = u[i] // g
        if q:
            Ur = U[r]
            U[i] = [x - q * y for x, y in zip(U[i], Ur)]
            u[i] -= q * g
    return U, det, r + 1, tuple(u)


def hnf_with_transform(M: Matrix, nrows: Optional[int] = None):
    """Row-style HNF of an arbitrary integer matrix.

    Returns ``(H, U, det_sign, pivots)`` with ``H == U @ M``. Zero rows of
    ``H`` sit at the bottom; ``U`` is not unique when ``M`` is rank
    deficient, but ``H`` always is.
    """
    n = len(M) if nrows is None else nrows
    ncols = len(M[0]) if M else 0
    U, det, r = identity(n), 1, 0
    hcols, pivots = [], []
    for j in range(ncols):
        U, det, r2, hcol = extend_hnf(U, det, r, [row[j] for row in M])
        if r2 > r:
            pivots.append(j)
        r = r2
        hcols.append(hcol)
    H = [list(row) for row in zip(*hcols)] if hcols else [[] for _ in range(n)]
    return H, U, det, pivots


def row_hnf(M: Matrix) -> tuple[list[list[int]], int]:
    """HNF of a full-row-rank matrix together with ``det(U)``.

    >>> row_hnf([[0, 1], [1, 0]])
    ([[1, 0], [0, 1]], -1)
    """
    n = len(M)
    H, _, det, pivots = hnf_with_transform(M)
    if len(pivots) != n:
        raise ValueError(f"row_hnf needs full row rank {n}, got rank {len(pivots)}")
    return H, det


def det(M: Matrix) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1]


def rank_rational(M: Matrix) -> int:
    """Rank over the rationals, fraction-free."""
    A = [list(row) for row in M if any(row)]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    r, prev = 0, 1
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if A[i][j]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][j]
        for i in range(r + 1, nrows):
            a = A[i][j]
            A[i] = [(x * p - a * y) // prev for x, y in zip(A[i], A[r])]
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def solve_rational(A: Matrix, b: Sequence) -> Optional[list[Fraction]]:
    """Some ``x`` with ``A @ x == b`` over the rationals, or ``None``.

    Free variables are set to zero.
    """
    nrows = len(A)
    ncols = len(A[0]) if A else 0
    if len(b) != nrows:
        raise ValueError("dimension mismatch")
    R = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    pivots = []
    r = 0
    for j in range(ncols):
        piv = next((i for i in range(r, nrows) if R[i][j]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        p = R[r][j]
        R[r] = [x / p for x in R[r]]
        for i in range(nrows):
            if i != r and R[i][j]:
                f = R[i][j]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(j)
        r += 1
        if r == nrows:
            break
    if any(row[-1] for row in R[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, j in enumerate(pivots):
        x[j] = R[i][-1]
    return x


@dataclass(frozen=True)
class SaturatedLattice:
    """A saturated sublattice of ``Z^n`` given by its canonical basis.

    ``basis`` holds the basis vectors (the columns of the basis matrix) as
    the rows of the row-HNF of the transposed basis matrix, so two equal
    lattices always compare equal.
    """

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> list[list[int]]:
        """The ``n x rank`` matrix whose columns are the basis vectors."""
        return transpose(self.basis, self.ambient_rank) if self.basis else [
            [] for _ in range(self.ambient_rank)
        ]


def saturate(columns: Sequence[Sequence[int]], n: int) -> SaturatedLattice:
    """Saturation ``span_Q(columns) & Z^n`` of a set of integer vectors."""
    if not columns:
        return SaturatedLattice(n, ())
    A = transpose(columns)
    _, U, _, pivots = hnf_with_transform(A)
    r = len(pivots)
    if r == 0:
        return SaturatedLattice(n, ())
    if r == n:
        return SaturatedLattice(n, tuple(tuple(row) for row in identity(n)))
    # Rows of U below the rank cut out the saturation as an integer kernel.
    K = U[r:]
    _, V, _, kpivots = hnf_with_transform(transpose(K))
    assert len(kpivots) == n - r
    gens = V[n - r:]
    H, _, _, _ = hnf_with_transform(gens)
    return SaturatedLattice(n, tuple(tuple(row) for row in H))


@lru_cache(maxsize=1 << 14)
def unimodular_completion(L: SaturatedLattice) -> tuple[tuple[tuple[int, ...], ...], int]:
    """Unimodular ``U`` with ``U @ basis == [I; 0]``, returned with ``det(U)``.

    The determinant is forced to ``+1`` whenever the lattice is proper, by
    negating the last row. The choice of ``U`` depends on ``L`` alone.
    """
    n, a = L.ambient_rank, L.rank
    if a == 0:
        return tuple(tuple(row) for row in identity(n)), 1
    H, U, d, pivots = hnf_with_transform(L.basis_matrix(), n)
    if H[:a] != identity(a) or any(any(row) for row in H[a:]):
        raise ValueError("lattice is not saturated")
    if d < 0 and a < n:
        U[-1] = [-x for x in U[-1]]
        d = 1
    return tuple(tuple(row) for row in U), d


def lattice_coords(L: SaturatedLattice, v: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Coordinates of ``v`` in the basis of ``L``, or ``None`` if ``v`` is not in ``L``."""
    U, _ = unimodular_completion(L)
    w = matvec(U, v)
    if any(w[L.rank:]):
        return None
    return tuple(w[: L.rank])


def quotient_coords(L: SaturatedLattice) -> tuple[tuple[int, ...], ...]:
    """Integer matrix of a surjection ``Z^n -> Z^(n - rank)`` with kernel ``L``."""
    U, _ = unimodular_completion(L)
    return U[L.rank:]


def matrix_to_json(M: Matrix) -> str:
    return json.dumps([[str(x) for x in row] for row in M])


def matrix_from_json(text: str) -> list[list[int]]:
    rows = json.loads(text)
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError("expected a JSON array of arrays")
    M = [[int(x) for x in row] for row in rows]
    if len({len(row) for row in M}) > 1:
        raise ValueError("ragged matrix")
    return M
