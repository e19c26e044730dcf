"""Dickson (sigma-circulant) matrices of linearized polynomials.

The Dickson matrix of ``L = sum a_i x^(q^i)`` has entry ``a_{(j-i) mod n}^(q^i)``
at ``(i, j)``.  ``L -> D_L`` turns composition into matrix multiplication, so
rank, determinant, adjugate and inverse of ``L`` can all be read off ``D_L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from linfield import linalg
from linfield.errors import NotABasis, NotAPermutation, NotDickson, TowerMismatch
from linfield.finite_field import Elem, FieldTower
from linfield.linearized import LinPoly, evaluate


@dataclass(frozen=True)
class DicksonMatrix:
    """Stored by first row; the remaining rows are Frobenius shifts of it."""

    tower: FieldTower
    first_row: tuple[int, ...]

    @classmethod
    def from_poly(cls, L: LinPoly) -> "DicksonMatrix":
        return cls(L.tower, L.coeffs)

    @classmethod
    def from_matrix(cls, tower: FieldTower, M: Sequence[Sequence[int]]) -> "DicksonMatrix":
        if not is_sigma_circulant(tower, M):
            raise NotDickson("matrix is not sigma-circulant")
        return cls(tower, tuple(M[0]))

    @classmethod
    def identity(cls, tower: FieldTower) -> "DicksonMatrix":
        return cls.from_poly(LinPoly.identity(tower))

    def entry(self, i: int, j: int) -> Elem:
        n = self.tower.n
        return self.tower.frobenius(self.first_row[(j - i) % n], i)

    def full(self) -> list[list[int]]:
        n = self.tower.n
        frob = self.tower.frobenius
        a = self.first_row
        return [[frob(a[(j - i) % n], i) for j in range(n)] for i in range(n)]

    def to_poly(self) -> LinPoly:
        return LinPoly(self.tower, self.first_row)


def is_sigma_circulant(tower: FieldTower, M: Sequence[Sequence[int]]) -> bool:
    """Check ``M[i+1][j+1] == M[i][j]^q`` for all ``i, j`` (indices mod n)."""
    n = tower.n
    if len(M) != n or any(len(r) != n for r in M):
        return False
    frob = tower.frobenius
    return all(M[(i + 1) % n][(j + 1) % n] == frob(M[i][j]) for i in range(n) for j in range(n))


def from_poly(L: LinPoly) -> DicksonMatrix:
    return DicksonMatrix.from_poly(L)


def to_poly(D: DicksonMatrix | Sequence[Sequence[int]], tower: FieldTower | None = None) -> LinPoly:
    """Inverse of :func:`from_poly`; a raw matrix must be sigma-circulant."""
    if isinstance(D, DicksonMatrix):
        return D.to_poly()
    if tower is None:
        raise TypeError("a raw matrix needs its tower")
    return DicksonMatrix.from_matrix(tower, D).to_poly()


def dickson_mul(D1: DicksonMatrix, D2: DicksonMatrix) -> DicksonMatrix:
    """Product through first rows only: ``c_i = sum_k a_k b_{i-k}^(q^k)``."""
    if D1.tower != D2.tower:
        raise TowerMismatch("operands live in different towers")
    F = D1.tower
    n = F.n
    add, mul, frob = F.add, F.mul, F.frobenius
    a, b = D1.first_row, D2.first_row
    row = []
    for i in range(n):
        acc = 0
        for k in range(n):
            if a[k]:
                acc = add(acc, mul(a[k], frob(b[(i - k) % n], k)))
        row.append(acc)
    return DicksonMatrix(F, tuple(row))


def rank(D: DicksonMatrix) -> int:
    return linalg.rank(D.tower, D.full())


def determinant(D: DicksonMatrix) -> Elem:
    d = linalg.det(D.tower, D.full())
    assert D.tower.frobenius(d) == d, "Dickson determinant left GF(q)"
    return d


def adjugate(D: DicksonMatrix) -> DicksonMatrix:
    """Classical adjugate through explicit minors; valid for singular ``D`` too."""
    adj = linalg.adjugate(D.tower, D.full())
    return DicksonMatrix.from_matrix(D.tower, adj)


def first_column_cofactors(L: LinPoly) -> list[Elem]:
    """Cofactors of ``D_L`` at ``(i, 0)``, which form the first row of the adjugate."""
    M = DicksonMatrix.from_poly(L).full()
    return [linalg.cofactor(L.tower, M, i, 0) for i in range(L.tower.n)]


def adjugate_poly(L: LinPoly) -> LinPoly:
    """``L*`` with ``L o L* = L* o L = det(L) x``; zero whenever rank(L) <= n - 2."""
    if L.tower.n == 1:
        return LinPoly.identity(L.tower)
    return LinPoly(L.tower, tuple(first_column_cofactors(L)))


def laplace_det(L: LinPoly, cofactors: Sequence[Elem] | None = None) -> Elem:
    """Expansion along the first column: ``sum_i a_{n-i}^(q^i) * cofactor(i, 0)``."""
    F = L.tower
    n = F.n
    if n == 1:
        return L.coeffs[0]
    cof = first_column_cofactors(L) if cofactors is None else cofactors
    return F.sum(F.mul(F.frobenius(L.coeffs[(n - i) % n], i), cof[i]) for i in range(n))


def inverse_poly(L: LinPoly) -> LinPoly:
    F = L.tower
    if F.n == 1:
        if not L.coeffs[0]:
            raise NotAPermutation("L is the zero map")
        return LinPoly(F, (F.inv(L.coeffs[0]),))
    cof = first_column_cofactors(L)
    d = laplace_det(L, cof)
    assert d == determinant(DicksonMatrix.from_poly(L)), "Laplace and elimination determinants disagree"
    if not d:
        raise NotAPermutation("Dickson matrix is singular")
    s = F.inv(d)
    return LinPoly(F, tuple(F.mul(s, c) for c in cof))


def is_permutation(L: LinPoly) -> bool:
    return rank(DicksonMatrix.from_poly(L)) == L.tower.n


# -- matrix of the induced GF(q)-linear map -------------------------------


def moore(tower: FieldTower, elems: Sequence[Elem], rows: int | None = None) -> list[list[int]]:
    """``(elems[j]^(q^i))`` with ``rows`` rows (default: one per element)."""
    rows = len(elems) if rows is None else rows
    return [[tower.frobenius(a, i) for a in elems] for i in range(rows)]


def matrix_rep(L: LinPoly, basis: Sequence[Elem]) -> list[list[int]]:
    """Matrix of ``L`` in ``basis`` as ``B^-1 D_L B`` with ``B`` the Moore matrix of the basis.

    Column ``j`` holds the coordinates of ``L(basis[j])``.
    """
    F = L.tower
    if len(basis) != F.n:
        raise NotABasis(f"need {F.n} elements, got {len(basis)}")
    B = moore(F, basis)
    if linalg.rank(F, B) != F.n:
        raise NotABasis("elements are linearly dependent over GF(q)")
    M = linalg.solve(F, B, linalg.matmul(F, DicksonMatrix.from_poly(L).full(), B))
    assert all(x < F.q for row in M for x in row), "conjugated matrix left GF(q)"
    return M


def matrix_rep_direct(L: LinPoly, basis: Sequence[Elem]) -> list[list[int]]:
    """Entry ``(i, j)`` is ``tr(dual_i * L(basis_j))``."""
    from linfield.moore_trace import dual_basis

    F = L.tower
    dual = dual_basis(F, basis)
    images = [evaluate(L, b) for b in basis]
    return [[F.trace(F.mul(d, y)) for y in images] for d in dual]
