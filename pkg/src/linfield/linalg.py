"""Dense exact linear algebra over a :class:`FieldTower`.

Matrices are lists of rows of element codes.  GF(q) matrices use the same
routines since GF(q) codes are closed under the tower's arithmetic.
"""

from __future__ import annotations

from typing import Sequence

from linfield.errors import DivisionByZero
from linfield.finite_field import FieldTower

Matrix = list[list[int]]


def copy(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(r) for r in M]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def transpose(M: Sequence[Sequence[int]]) -> Matrix:
    return [list(c) for c in zip(*M)]


def matmul(F: FieldTower, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    add, mul = F.add, F.mul
    Bt = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add(acc, mul(x, y))
            out_row.append(acc)
        out.append(out_row)
    return out


def scale(F: FieldTower, c: int, M: Sequence[Sequence[int]]) -> Matrix:
    return [[F.mul(c, x) for x in row] for row in M]


def rref(F: FieldTower, M: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; pivots are searched left to right in the first ``ncols`` columns."""
    R = copy(M)
    if not R:
        return R, []
    rows, cols = len(R), len(R[0])
    ncols = cols if ncols is None else ncols
    sub, mul, inv = F.sub, F.mul, F.inv
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if R[i][c]), None)
        if k is None:
            continue
        R[r], R[k] = R[k], R[r]
        s = inv(R[r][c])
        if s != 1:
            R[r] = [mul(s, x) for x in R[r]]
        prow = R[r]
        for i in range(rows):
            t = R[i][c]
            if i != r and t:
                R[i] = [sub(x, mul(t, y)) if y else x for x, y in zip(R[i], prow)]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: FieldTower, M: Sequence[Sequence[int]]) -> int:
    """Rank by forward elimination (no back substitution)."""
    R = copy(M)
    if not R:
        return 0
    rows, cols = len(R), len(R[0])
    sub, mul, div = F.sub, F.mul, F.div
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if R[i][c]), None)
        if k is None:
            continue
        R[r], R[k] = R[k], R[r]
        prow, piv = R[r], R[r][c]
        for i in range(r + 1, rows):
            t = R[i][c]
            if t:
                f = div(t, piv)
                R[i] = [sub(x, mul(f, y)) if y else x for x, y in zip(R[i], prow)]
        r += 1
    return r


def det(F: FieldTower, M: Sequence[Sequence[int]]) -> int:
    """Determinant by elimination; row swaps contribute a factor of -1 in GF(p)."""
    R = copy(M)
    n = len(R)
    if n == 0:
        return 1
    sub, mul, div = F.sub, F.mul, F.div
    minus_one = F.neg(1)
    d = 1
    for c in range(n):
        k = next((i for i in range(c, n) if R[i][c]), None)
        if k is None:
            return 0
        if k != c:
            R[c], R[k] = R[k], R[c]
            d = mul(d, minus_one)
        prow, piv = R[c], R[c][c]
        d = mul(d, piv)
        for i in range(c + 1, n):
            t = R[i][c]
            if t:
                f = div(t, piv)
                R[i] = [sub(x, mul(f, y)) if y else x for x, y in zip(R[i], prow)]
    return d


def solve(F: FieldTower, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    """Solve ``A X = B`` for square non-singular ``A``."""
    n = len(A)
    aug = [list(A[i]) + list(B[i]) for i in range(n)]
    R, pivots = rref(F, aug, ncols=n)
    if pivots != list(range(n)):
        raise DivisionByZero("matrix is singular")
    return [row[n:] for row in R]


def inverse(F: FieldTower, A: Sequence[Sequence[int]]) -> Matrix:
    return solve(F, A, identity(len(A)))


def minor(M: Sequence[Sequence[int]], i: int, j: int) -> Matrix:
    return [list(r[:j]) + list(r[j + 1 :]) for k, r in enumerate(M) if k != i]


def cofactor(F: FieldTower, M: Sequence[Sequence[int]], i: int, j: int) -> int:
    d = det(F, minor(M, i, j))
    return F.neg(d) if (i + j) % 2 else d


def adjugate(F: FieldTower, M: Sequence[Sequence[int]]) -> Matrix:
    """Classical adjugate: entry (i, j) is the (j, i) cofactor."""
    n = len(M)
    if n == 1:
        return [[1]]
    C = [[cofactor(F, M, i, j) for j in range(n)] for i in range(n)]
    return transpose(C)


def nullspace(F: FieldTower, M: Sequence[Sequence[int]]) -> Matrix:
    """Basis of ``{x : M x = 0}``, one vector per free column, in column order."""
    if not M:
        return []
    cols = len(M[0])
    R, pivots = rref(F, M)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(R[r][fc])
        basis.append(v)
    return basis
