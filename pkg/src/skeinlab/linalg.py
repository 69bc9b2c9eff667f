"""Exact linear algebra over Q (and, for small sizes, over Q[s, s^-1]).

Rank and kernel computations back the generic-q dimension checks: matrices
are specialized at rational points and handled with Fraction arithmetic, so
results are exact.  Kernels of tall sparse matrices are computed
incrementally (intersecting row kernels), which is fast because the kernel
dimension saturates after a few independent rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import HalfLaurent

Vec = list[Fraction]
SparseRow = dict[int, Fraction]


def _as_fraction_rows(rows: Iterable[Sequence[Fraction]]) -> list[Vec]:
    return [[Fraction(c) for c in row] for row in rows]


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = _as_fraction_rows(rows)
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def row_space_basis(rows: Iterable[Sequence[Fraction]]) -> list[Vec]:
    """Canonical basis (RREF rows) of the row space."""
    return rref(rows)[0]


def same_row_space(rows_a: Iterable[Sequence[Fraction]], rows_b: Iterable[Sequence[Fraction]]) -> bool:
    return row_space_basis(rows_a) == row_space_basis(rows_b)


def row_space_contains(rows: Iterable[Sequence[Fraction]], vec: Sequence[Fraction]) -> bool:
    basis = row_space_basis(rows)
    v = [Fraction(c) for c in vec]
    for row in basis:
        p = next(i for i, x in enumerate(row) if x)
        if v[p]:
            f = v[p]
            v = [x - f * y for x, y in zip(v, row)]
    return not any(v)


def kernel_basis(rows: Iterable[SparseRow], n: int) -> list[Vec]:
    """Basis of {x in Q^n : row . x = 0 for all rows}; rows are sparse dicts.

    Maintains a basis of the running kernel and cuts it down one row at a
    time, so wide-but-low-rank systems cost little after rank saturation.
    """
    basis: list[Vec] = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for row in rows:
        if not basis:
            break
        if not row:
            continue
        vals = [sum((c * b[j] for j, c in row.items()), Fraction(0)) for b in basis]
        pidx = next((i for i, v in enumerate(vals) if v), None)
        if pidx is None:
            continue
        pivot = basis.pop(pidx)
        pval = vals.pop(pidx)
        basis = [
            b if not v else [x - (v / pval) * y for x, y in zip(b, pivot)]
            for b, v in zip(basis, vals)
        ]
    return basis


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vec | None:
    """One solution x of A x = b (A given by dense rows), or None."""
    mat = [[Fraction(c) for c in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    if not mat:
        return None
    ncols = len(rows[0])
    red, pivots = rref(mat)
    sol = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        if p == ncols:
            return None  # inconsistent: pivot in augmented column
        sol[p] = row[-1]
    return sol


# -- fraction-free elimination over the Laurent ring -------------------------


def rank_symbolic(rows: Sequence[Sequence[HalfLaurent]]) -> int:
    """Rank over the fraction field Q(s) by Bareiss elimination.

    Exact but cubic with polynomial entries; intended for small matrices
    (the --symbolic path of dimension checks).
    """
    mat = [list(row) for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    prev = HalfLaurent.one()
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(mat)) if not mat[i][c].is_zero()), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        pivot = mat[r][c]
        for i in range(r + 1, len(mat)):
            fi = mat[i][c]
            for j in range(ncols):
                num = pivot * mat[i][j] - fi * mat[r][j]
                mat[i][j] = num.divide_exact(prev)
        prev = pivot
        r += 1
        if r == len(mat):
            break
    return r
