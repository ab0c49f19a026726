"""Dense matrices over exact entries, as tuples of row tuples.

Multiplication skips zero entries; idempotents and generator matrices are
sparse, so this is the dominant saving in every verification pass.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

Matrix = tuple  # tuple of row tuples

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(n: int) -> Matrix:
    return tuple((ZERO,) * n for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def diag(values: Sequence) -> Matrix:
    n = len(values)
    return tuple(tuple(values[i] if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * n
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return tuple(out)


def matadd(a: Matrix, b: Matrix, sign: int = 1) -> Matrix:
    if sign == 1:
        return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matscale(a: Matrix, c) -> Matrix:
    return tuple(tuple(x * c if x else ZERO for x in row) for row in a)


def matmap(a: Matrix, fn: Callable) -> Matrix:
    return tuple(tuple(fn(x) for x in row) for row in a)


def is_diagonal(a: Matrix) -> bool:
    return all(not x for i, row in enumerate(a) for j, x in enumerate(row) if i != j)


def trace(a: Matrix):
    total = ZERO
    for i, row in enumerate(a):
        total = total + row[i]
    return total


def rank(a: Matrix) -> int:
    """Rank by Gaussian elimination over the field of the entries."""
    rows = [list(r) for r in a]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        p = rows[rk][col]
        for i in range(rk + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / p
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rk])]
        rk += 1
    return rk
