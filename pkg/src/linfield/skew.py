"""The skew-polynomial ring GF(q^n)[x; sigma] with ``x b = b^q x``.

``phi`` sends ``sum a_i x^i`` to ``sum a_i x^(q^i)`` and turns products into
compositions; right division and right gcd therefore talk about right
composition factors of linearized polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from linfield.errors import BothZero, DivisionByZeroPoly, TowerMismatch, WrongRank
from linfield.finite_field import Elem, FieldTower
from linfield.linearized import LinPoly, compose, evaluate, kernel_basis, rank_bruteforce


def _trim(cs: Iterable[int]) -> tuple[int, ...]:
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class SkewPoly:
    """Dense coefficients, lowest degree first; the zero polynomial is empty."""

    tower: FieldTower
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))
        for a in self.coeffs:
            self.tower.check(a)

    @classmethod
    def one(cls, tower: FieldTower) -> "SkewPoly":
        return cls(tower, (1,))

    @classmethod
    def x_pow_minus_one(cls, tower: FieldTower, k: int) -> "SkewPoly":
        """``x^k - 1``."""
        return cls(tower, (tower.neg(1),) + (0,) * (k - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Elem:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_add(self, other)

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_sub(self, other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return skew_mul(self, other)


def _check(f: SkewPoly, g: SkewPoly) -> FieldTower:
    if f.tower != g.tower:
        raise TowerMismatch("operands live in different towers")
    return f.tower


def skew_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    F = _check(f, g)
    m = max(len(f.coeffs), len(g.coeffs))
    a = f.coeffs + (0,) * (m - len(f.coeffs))
    b = g.coeffs + (0,) * (m - len(g.coeffs))
    return SkewPoly(F, tuple(F.add(x, y) for x, y in zip(a, b)))


def skew_sub(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    F = g.tower
    return skew_add(f, SkewPoly(F, tuple(F.neg(b) for b in g.coeffs)))


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Distributive extension of ``(a x^i)(b x^j) = a b^(q^i) x^(i+j)``."""
    F = _check(f, g)
    if f.is_zero() or g.is_zero():
        return SkewPoly(F, ())
    add, mul, frob = F.add, F.mul, F.frobenius
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if not a:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = add(out[i + j], mul(a, frob(b, i)))
    return SkewPoly(F, tuple(out))


def _shift_times(F: FieldTower, c: Elem, s: int, g: Sequence[int]) -> list[int]:
    """Coefficients of ``(c x^s) * g``."""
    return [0] * s + [F.mul(c, F.frobenius(b, s)) for b in g]


def right_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """``(quo, rem)`` with ``f = quo * g + rem`` and ``deg rem < deg g``."""
    F = _check(f, g)
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero skew polynomial")
    r = list(f.coeffs)
    dg = g.degree
    quo = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg:
        s = len(r) - 1 - dg
        c = F.div(r[-1], F.frobenius(g.lead, s))
        quo[s] = c
        t = _shift_times(F, c, s, g.coeffs)
        r = [F.sub(x, y) for x, y in zip(r, t)]
        assert not r[-1]
        r = list(_trim(r))
    return SkewPoly(F, tuple(quo)), SkewPoly(F, tuple(r))


def monic(f: SkewPoly) -> SkewPoly:
    """Left-multiply by the inverse of the leading coefficient."""
    F = f.tower
    s = F.inv(f.lead)
    return SkewPoly(F, tuple(F.mul(s, a) for a in f.coeffs))


def rgcd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor, by the right Euclidean algorithm."""
    _check(f, g)
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero polynomials")
    a, b = f, g
    while not b.is_zero():
        a, b = b, right_divide(a, b)[1]
    return monic(a)


# -- link with linearized polynomials -------------------------------------


def phi(s: SkewPoly) -> LinPoly:
    """``sum a_i x^i -> sum a_i x^(q^i)``, reduced modulo ``x^n - 1``."""
    return LinPoly.from_coeffs(s.tower, s.coeffs or (0,))


def phi_inv(L: LinPoly) -> SkewPoly:
    return SkewPoly(L.tower, L.coeffs)


def rank_via_gcd(L: LinPoly) -> int:
    """``n - deg rgcd(phi^-1(L), x^n - 1)``."""
    n = L.tower.n
    return n - rgcd(phi_inv(L), SkewPoly.x_pow_minus_one(L.tower, n)).degree


def kernel_factor(tower: FieldTower, gamma: Elem) -> LinPoly:
    """``x^q - gamma^(q-1) x``, whose roots are exactly ``gamma * GF(q)``."""
    cs = [0] * tower.n
    if tower.n == 1:
        raise WrongRank("no kernel factor exists for n = 1")
    cs[0] = tower.neg(tower.pow(gamma, tower.q - 1))
    cs[1] = 1
    return LinPoly(tower, tuple(cs))


@dataclass(frozen=True)
class FactorChain:
    """``L = permutation o K_{r-1} o ... o K_0`` with ``K_i = x^q - gammas[i]^(q-1) x``."""

    permutation: LinPoly
    gammas: tuple[int, ...]

    def factors(self) -> list[LinPoly]:
        F = self.permutation.tower
        return [self.permutation] + [kernel_factor(F, g) for g in reversed(self.gammas)]

    def recompose(self) -> LinPoly:
        out = self.permutation
        F = out.tower
        for g in reversed(self.gammas):
            out = compose(out, kernel_factor(F, g))
        return out


def factor_chain(L: LinPoly) -> FactorChain:
    """Peel kernel factors off the right of a rank ``n - 1`` polynomial until a permutation remains."""
    F = L.tower
    n = F.n
    if L.is_zero() or rank_bruteforce(L) != n - 1:
        raise WrongRank("factor_chain needs a nonzero polynomial of rank n - 1")
    gammas = []
    current = L
    while rank_bruteforce(current) == n - 1:
        (gamma,) = kernel_basis(current)
        quo, rem = right_divide(phi_inv(current), phi_inv(kernel_factor(F, gamma)))
        assert rem.is_zero(), "kernel factor does not divide on the right"
        gammas.append(gamma)
        current = phi(quo)
    return FactorChain(current, tuple(gammas))


def chain_conditions_hold(chain: FactorChain, L: LinPoly) -> bool:
    """Side conditions of a chain: ``gammas[0]`` spans ker L and ``tr(g_i / g_{i-1}^q) != 0``."""
    F = L.tower
    g = chain.gammas
    if not g or evaluate(L, g[0]) or len(kernel_basis(L)) != 1:
        return False
    return all(F.trace(F.div(g[i], F.frobenius(g[i - 1]))) for i in range(1, len(g)))
