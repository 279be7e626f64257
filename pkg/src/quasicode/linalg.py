"""Exact Gaussian elimination over a field supplied as a small operations record.

One routine serves every coefficient field in the package: rationals (Fraction
arithmetic is exact) and prime fields (modular inverses).  Matrices are plain
lists of lists of field values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable


@dataclass(frozen=True)
class FieldOps:
    zero: object
    one: object
    add: Callable
    sub: Callable
    mul: Callable
    inv: Callable
    is_zero: Callable


def fraction_ops() -> FieldOps:
    return FieldOps(
        zero=Fraction(0),
        one=Fraction(1),
        add=lambda a, b: a + b,
        sub=lambda a, b: a - b,
        mul=lambda a, b: a * b,
        inv=lambda a: Fraction(1) / a,
        is_zero=lambda a: a == 0,
    )


def prime_field_ops(p: int) -> FieldOps:
    return FieldOps(
        zero=0,
        one=1 % p,
        add=lambda a, b: (a + b) % p,
        sub=lambda a, b: (a - b) % p,
        mul=lambda a, b: (a * b) % p,
        inv=lambda a: pow(a, -1, p),
        is_zero=lambda a: a % p == 0,
    )


def row_reduce(rows: list[list], ops: FieldOps) -> tuple[list[list], list[int]]:
    """Reduced row echelon form. Returns (new rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if not ops.is_zero(mat[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = ops.inv(mat[r][c])
        mat[r] = [ops.mul(inv, v) for v in mat[r]]
        for i in range(nrows):
            if i != r and not ops.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [ops.sub(v, ops.mul(f, w)) for v, w in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def nullspace_vector(rows: list[list], ncols: int, ops: FieldOps) -> list | None:
    """A nonzero kernel vector of the homogeneous system, or None if the kernel is trivial.

    Deterministic: sets the smallest free column to one, remaining free columns to zero.
    """
    if not rows:
        v = [ops.zero] * ncols
        if ncols == 0:
            return None
        v[0] = ops.one
        return v
    mat, pivots = row_reduce(rows, ops)
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    f = free[0]
    v = [ops.zero] * ncols
    v[f] = ops.one
    for r, c in enumerate(pivots):
        # x_c = -sum over free columns; only column f is nonzero here
        v[c] = ops.sub(ops.zero, mat[r][f])
    return v


def invert_matrix(rows: list[list], ops: FieldOps) -> list[list] | None:
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(rows[i]) + [ops.one if j == i else ops.zero for j in range(n)] for i in range(n)]
    mat, pivots = row_reduce(aug, ops)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in mat]


def mat_vec(rows: list[list], vec: list, ops: FieldOps) -> list:
    out = []
    for row in rows:
        acc = ops.zero
        for a, x in zip(row, vec):
            acc = ops.add(acc, ops.mul(a, x))
        out.append(acc)
    return out


def mat_mul(a: list[list], b: list[list], ops: FieldOps) -> list[list]:
    n, k, m2 = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m2):
            acc = ops.zero
            for t in range(k):
                acc = ops.add(acc, ops.mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(row)
    return out
