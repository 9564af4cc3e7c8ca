"""
Exact dense linear algebra over Q on plain nested lists.

Entries are ``int`` or ``fractions.Fraction``; nothing here ever produces a
float. Pivoting takes the first nonzero entry (arithmetic is exact, so there
is no magnitude heuristic).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]

__all__ = [
    "zeros", "eye", "mat_mul", "mat_add", "mat_sub", "mat_scale", "transpose", "is_zero",
    "rref", "rank", "nullspace", "row_space", "column_space", "inverse", "trace",
    "to_fraction", "vec_mat", "mat_vec", "same_row_space", "stack",
]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[0] * (n if m is None else m) for _ in range(n)]


def eye(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def to_fraction(A: Matrix) -> Matrix:
    return [[Fraction(x) for x in row] for row in A]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """Product skipping zero entries of A and zero rows of B."""
    if not A:
        return []
    m = len(B[0]) if B else 0
    nonzero_rows = [any(row) for row in B]
    out = []
    for row in A:
        acc = [0] * m
        for k, a in enumerate(row):
            if a and nonzero_rows[k]:
                brow = B[k]
                for j in range(m):
                    b = brow[j]
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def vec_mat(v: Sequence, B: Matrix) -> list:
    m = len(B[0]) if B else 0
    acc = [0] * m
    for k, a in enumerate(v):
        if a:
            brow = B[k]
            for j in range(m):
                if brow[j]:
                    acc[j] += a * brow[j]
    return acc


def mat_vec(A: Matrix, v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v) if a and x) for row in A]


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(c, A: Matrix) -> Matrix:
    return [[c * a for a in row] for row in A]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def is_zero(A: Matrix) -> bool:
    return not any(any(row) for row in A)


def trace(A: Matrix):
    return sum(A[i][i] for i in range(len(A)))


def stack(*blocks: Matrix) -> Matrix:
    out = []
    for B in blocks:
        out.extend(list(row) for row in B)
    return out


def rref(A: Matrix, columns: Sequence[int] | None = None) -> tuple[Matrix, list[int]]:
    """
    Reduced row echelon form and pivot columns.

    ``columns`` fixes the order in which columns are searched for pivots
    (default left to right); pivots are returned in discovery order and the
    returned rows are the nonzero rows only.
    """
    M = [[Fraction(x) for x in row] for row in A if any(row)]
    if not M:
        return [], []
    ncols = len(M[0])
    order = range(ncols) if columns is None else columns
    pivots = []
    row = 0
    for col in order:
        if row == len(M):
            break
        sel = next((i for i in range(row, len(M)) if M[i][col]), None)
        if sel is None:
            continue
        M[row], M[sel] = M[sel], M[row]
        piv = M[row][col]
        if piv != 1:
            M[row] = [x / piv for x in M[row]]
        prow = M[row]
        nz = [j for j in range(ncols) if prow[j]]
        for i in range(len(M)):
            if i != row:
                f = M[i][col]
                if f:
                    Mi = M[i]
                    for j in nz:
                        Mi[j] -= f * prow[j]
        pivots.append(col)
        row += 1
    return M[:row], pivots


def rank(A: Matrix) -> int:
    return len(rref(A)[1])


def row_space(A: Matrix) -> Matrix:
    """Canonical basis (RREF rows) of the row space."""
    return rref(A)[0]


def column_space(A: Matrix) -> Matrix:
    """Basis of the column space, returned as a list of column vectors."""
    return rref(transpose(A))[0]


def same_row_space(A: Matrix, B: Matrix) -> bool:
    return rref(A)[0] == rref(B)[0]


def nullspace(A: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}; one vector per free column, that column set to 1."""
    if ncols is None:
        ncols = len(A[0]) if A else 0
    R, pivots = rref(A)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, c in zip(R, pivots):
            x[c] = -row[f]
        basis.append(x)
    return basis


def inverse(A: Matrix) -> Matrix:
    n = len(A)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R]
