import random

import pytest
from hypothesis import given, strategies as st

from conftest import TOWERS, W, W1, tower_and_polys, towers
from linfield.errors import BothZero, DivisionByZeroPoly, WrongRank
from linfield.linearized import LinPoly, compose, rank_bruteforce
from linfield.skew import (
    SkewPoly,
    chain_conditions_hold,
    factor_chain,
    monic,
    phi,
    phi_inv,
    rank_via_gcd,
    rgcd,
    right_divide,
    skew_mul,
)


def sp(F, *cs):
    return SkewPoly(F, tuple(cs))


def test_worked_examples(F4, L_a):
    x = sp(F4, 0, 1)
    assert skew_mul(x, sp(F4, W)) == sp(F4, 0, W1)
    f = sp(F4, W, 1)
    assert f * SkewPoly.one(F4) == f
    assert f * f == sp(F4, W1, 1, 1)
    x2m1 = SkewPoly.x_pow_minus_one(F4, 2)
    assert right_divide(x2m1, f) == (sp(F4, W1, 1), sp(F4))
    assert right_divide(f, SkewPoly.one(F4)) == (f, sp(F4))
    assert right_divide(f, f) == (SkewPoly.one(F4), sp(F4))
    assert rgcd(x2m1, f) == f
    assert rgcd(f, SkewPoly.one(F4)) == SkewPoly.one(F4)
    assert rank_via_gcd(L_a) == 1
    assert rank_via_gcd(LinPoly.identity(F4)) == 2
    assert rank_via_gcd(LinPoly.zero(F4)) == 0
    chain = factor_chain(L_a)
    assert chain.permutation == LinPoly.identity(F4) and chain.gammas == (W,)
    assert phi_inv(L_a) == f
    assert phi(sp(F4, 0, 0, 1)) == LinPoly.identity(F4)


def test_errors(F4):
    with pytest.raises(DivisionByZeroPoly):
        right_divide(sp(F4, 1), sp(F4))
    with pytest.raises(BothZero):
        rgcd(sp(F4), sp(F4))
    with pytest.raises(WrongRank):
        factor_chain(LinPoly.identity(F4))


@st.composite
def skew_pair(draw):
    F = draw(towers)
    coeff = st.integers(0, F.order - 1)
    f = SkewPoly(F, tuple(draw(st.lists(coeff, max_size=6))))
    g = SkewPoly(F, tuple(draw(st.lists(coeff, min_size=1, max_size=4))))
    return F, f, g


@given(skew_pair())
def test_right_division_identity(fg):
    F, f, g = fg
    if g.is_zero():
        return
    quo, rem = right_divide(f, g)
    assert quo * g + rem == f
    assert rem.degree < g.degree


@given(skew_pair())
def test_rgcd_divides_both(fg):
    F, f, g = fg
    if f.is_zero() and g.is_zero():
        return
    d = rgcd(f, g)
    assert d.lead == 1
    assert right_divide(f, d)[1].is_zero() and right_divide(g, d)[1].is_zero()


@given(tower_and_polys(2))
def test_phi_is_multiplicative(tp):
    F, L1, L2 = tp
    assert phi(phi_inv(L1) * phi_inv(L2)) == compose(L1, L2)


@given(tower_and_polys(1))
def test_rank_via_gcd_matches_bruteforce(tp):
    F, L = tp
    assert rank_via_gcd(L) == rank_bruteforce(L)


def test_factor_chain_gf9_samples():
    F = TOWERS["gf9"]
    rng = random.Random(9)
    found = 0
    while found < 50:
        L = LinPoly(F, tuple(F.random_element(rng) for _ in range(F.n)))
        if rank_bruteforce(L) != F.n - 1:
            continue
        found += 1
        chain = factor_chain(L)
        assert chain.recompose() == L
        assert chain_conditions_hold(chain, L)
        assert monic(phi_inv(L)).lead == 1
