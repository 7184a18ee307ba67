"""Exact signature of symmetric rational matrices."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction


def inertia(matrix: Sequence[Sequence[int | Fraction]]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of a symmetric matrix.

    Symmetric Gaussian elimination over the rationals (congruence
    diagonalization).  When every remaining diagonal entry vanishes but an
    off-diagonal entry ``b`` at ``(i, j)`` does not, the 2x2 block
    ``[[0, b], [b, 0]]`` is hyperbolic: it contributes one positive and one
    negative direction, and is split off before elimination continues.

    Raises:
        ValueError: if the matrix is not square and symmetric.
    """
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    for row in a:
        if len(row) != n:
            raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = 0
    idx = list(range(n))
    while idx:
        piv = next((i for i in idx if a[i][i] != 0), None)
        if piv is not None:
            p = a[piv][piv]
            if p > 0:
                pos += 1
            else:
                neg += 1
            rest = [k for k in idx if k != piv]
            for k in rest:
                f = a[k][piv] / p
                if f:
                    for m in rest:
                        a[k][m] -= f * a[piv][m]
            idx = rest
            continue
        pair = next(((i, j) for i in idx for j in idx if i < j and a[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        pos += 1
        neg += 1
        rest = [k for k in idx if k not in (i, j)]
        # Schur complement of the block [[0, b], [b, 0]]
        for k in rest:
            for m in rest:
                a[k][m] -= (a[k][i] * a[j][m] + a[k][j] * a[i][m]) / b
        idx = rest
    return pos, neg, n - pos - neg


def signature(matrix: Sequence[Sequence[int | Fraction]]) -> int:
    pos, neg, _ = inertia(matrix)
    return pos - neg
