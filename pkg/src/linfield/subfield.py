"""Linearized polynomials with coefficients in an intermediate field GF(q^m), m | n."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from linfield.errors import NotADivisor, NotNormalBasis, NotSubfieldPoly
from linfield.finite_field import Elem, FieldTower
from linfield.linearized import LinPoly, evaluate
from linfield.moore_trace import b_matrix, dual_basis, moore_rank


def normal_basis(tower: FieldTower, beta: Elem) -> list[Elem]:
    return [tower.frobenius(beta, i) for i in range(tower.n)]


def is_normal_generator(tower: FieldTower, beta: Elem) -> bool:
    return moore_rank(tower, normal_basis(tower, beta)) == tower.n


def find_normal_generator(tower: FieldTower) -> Elem:
    """First element, in code order, whose conjugates form a basis."""
    for beta in tower.elements():
        if is_normal_generator(tower, beta):
            return beta
    raise NotNormalBasis("no normal basis generator found")


@dataclass(frozen=True)
class SubfieldContext:
    tower: FieldTower
    m: int
    beta: Elem

    def __post_init__(self) -> None:
        n = self.tower.n
        if self.m <= 0 or n % self.m:
            raise NotADivisor(f"{self.m} does not divide {n}")
        if not is_normal_generator(self.tower, self.beta):
            raise NotNormalBasis(f"{self.beta} does not generate a normal basis")

    @classmethod
    def default(cls, tower: FieldTower, m: int) -> "SubfieldContext":
        return cls(tower, m, find_normal_generator(tower))

    @property
    def t(self) -> int:
        return self.tower.n // self.m

    @property
    def basis(self) -> list[Elem]:
        return normal_basis(self.tower, self.beta)

    @cached_property
    def dual(self) -> list[Elem]:
        return dual_basis(self.tower, self.basis)


def is_subfield_poly(L: LinPoly, m: int) -> bool:
    F = L.tower
    if m <= 0 or F.n % m:
        raise NotADivisor(f"{m} does not divide {F.n}")
    return all(F.frobenius(a, m) == a for a in L.coeffs)


def full_form_alphas(L: LinPoly, ctx: SubfieldContext) -> list[Elem]:
    """``alpha_i = L(beta*_i)`` for the dual of the normal basis (duals computed, not assumed normal)."""
    return [evaluate(L, d) for d in ctx.dual]


def alpha_pattern_holds(L: LinPoly, ctx: SubfieldContext) -> bool:
    """``alpha_{jm+k} == alpha_k^(q^(jm))`` for all ``j < t``, ``k < m``."""
    F = L.tower
    alphas = full_form_alphas(L, ctx)
    m = ctx.m
    return all(
        alphas[j * m + k] == F.frobenius(alphas[k], j * m) for j in range(ctx.t) for k in range(m)
    )


def alpha_pattern_check(L: LinPoly, ctx: SubfieldContext) -> bool:
    if not is_subfield_poly(L, ctx.m):
        raise NotSubfieldPoly(f"coefficients are not all in GF(q^{ctx.m})")
    return alpha_pattern_holds(L, ctx)


def is_block_circulant(B: Sequence[Sequence[int]], t: int, m: int) -> bool:
    """``t x t`` grid of ``m x m`` blocks with ``block(i, j) == block(i+1, j+1)`` (mod t)."""
    n = t * m
    return all(
        B[(r + m) % n][(c + m) % n] == B[r][c] for r in range(n) for c in range(n)
    )


def block_circulant_check(L: LinPoly, ctx: SubfieldContext) -> tuple[list[list[int]], bool]:
    if not is_subfield_poly(L, ctx.m):
        raise NotSubfieldPoly(f"coefficients are not all in GF(q^{ctx.m})")
    B = b_matrix(L, ctx.basis, ctx.dual)
    return B, is_block_circulant(B, ctx.t, ctx.m)


def blocks(B: Sequence[Sequence[int]], t: int, m: int) -> list[list[list[int]]]:
    """First block row ``B_0, ..., B_{t-1}``."""
    return [[list(B[r][j * m : (j + 1) * m]) for r in range(m)] for j in range(t)]


# -- ordinary polynomials over GF(q) -------------------------------------------


def _trim(cs: list[int]) -> list[int]:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def poly_gcd(F: FieldTower, a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Monic gcd in GF(q)[x] (commutative), coefficients lowest degree first."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        r = list(a)
        inv_lead = F.inv(b[-1])
        while len(r) >= len(b):
            c = F.mul(r[-1], inv_lead)
            s = len(r) - len(b)
            for j, y in enumerate(b):
                r[s + j] = F.sub(r[s + j], F.mul(c, y))
            r = _trim(r)
        a, b = b, r
    if not a:
        return []
    s = F.inv(a[-1])
    return [F.mul(s, x) for x in a]


def rank_gcd_check(alpha: Elem, ctx: SubfieldContext) -> tuple[int, int]:
    """Rank of the conjugates of ``alpha`` two ways.

    ``lhs`` is the Moore rank of ``alpha^(q^i)``; ``rhs`` is ``n - deg gcd(c(x), x^n - 1)``
    with ``c(x) = sum tr(alpha beta^(q^i)) x^i`` in GF(q)[x].
    """
    F = ctx.tower
    if ctx.m != 1:
        raise ValueError("rank_gcd_check needs a context with m = 1")
    n = F.n
    lhs = moore_rank(F, [F.frobenius(alpha, i) for i in range(n)])
    c = [F.trace(F.mul(alpha, b)) for b in ctx.basis]
    x_n_minus_1 = [F.neg(1)] + [0] * (n - 1) + [1]
    g = poly_gcd(F, c, x_n_minus_1)
    return lhs, n - (len(g) - 1)
