import random

import pytest

from conftest import TOWERS, W
from linfield.errors import NotADivisor, NotNormalBasis, NotSubfieldPoly
from linfield.finite_field import binary_tower
from linfield.laws import subfield_structure
from linfield.linalg import identity, matmul
from linfield.linearized import LinPoly, compose, random_poly
from linfield.subfield import (
    SubfieldContext,
    alpha_pattern_check,
    block_circulant_check,
    find_normal_generator,
    is_block_circulant,
    is_subfield_poly,
    poly_gcd,
    rank_gcd_check,
)


def test_context_validation(F4):
    with pytest.raises(NotADivisor):
        SubfieldContext(TOWERS["gf8"], 2, find_normal_generator(TOWERS["gf8"]))
    with pytest.raises(NotNormalBasis):
        SubfieldContext(F4, 1, 1)
    assert SubfieldContext.default(F4, 1).beta == W


def test_is_subfield_poly():
    F = binary_tower(4)
    rng = random.Random(0)
    L = random_poly(F, rng)
    assert is_subfield_poly(L, 4)
    assert is_subfield_poly(LinPoly(F, (1, 0, 1, 0)), 1)
    v = next(a for a in F.elements() if F.frobenius(a, 2) != a)
    assert not is_subfield_poly(LinPoly(F, (v, 0, 0, 0)), 2)


def test_pattern_and_block_circulant():
    F = binary_tower(4)
    ctx = SubfieldContext.default(F, 2)
    gf4_inside = [a for a in F.elements() if F.frobenius(a, 2) == a]
    rng = random.Random(1)
    for _ in range(30):
        L = LinPoly(F, tuple(rng.choice(gf4_inside) for _ in range(4)))
        assert alpha_pattern_check(L, ctx)
        B, ok = block_circulant_check(L, ctx)
        assert ok
    outside = next(a for a in F.elements() if F.frobenius(a, 2) != a)
    with pytest.raises(NotSubfieldPoly):
        alpha_pattern_check(LinPoly(F, (outside, 0, 0, 0)), ctx)
    B, ok = block_circulant_check(LinPoly.identity(F), ctx)
    assert B == identity(4) and ok


def test_m_equals_n_vacuous():
    F = binary_tower(4)
    ctx = SubfieldContext.default(F, 4)
    L = random_poly(F, random.Random(2))
    assert alpha_pattern_check(L, ctx)
    assert block_circulant_check(L, ctx)[1]


def test_m1_gives_circulant():
    F = binary_tower(4)
    ctx = SubfieldContext.default(F, 1)
    L = LinPoly(F, (1, 1, 0, 1))
    B, ok = block_circulant_check(L, ctx)
    assert ok and all(B[(i + 1) % 4][(j + 1) % 4] == B[i][j] for i in range(4) for j in range(4))


def test_b_map_multiplicative():
    from linfield.moore_trace import b_matrix

    F = binary_tower(4)
    ctx = SubfieldContext.default(F, 2)
    gf4_inside = [a for a in F.elements() if F.frobenius(a, 2) == a]
    rng = random.Random(3)
    for _ in range(50):
        L1 = LinPoly(F, tuple(rng.choice(gf4_inside) for _ in range(4)))
        L2 = LinPoly(F, tuple(rng.choice(gf4_inside) for _ in range(4)))
        lhs = b_matrix(compose(L1, L2), ctx.basis, ctx.dual)
        assert lhs == matmul(F, b_matrix(L1, ctx.basis, ctx.dual), b_matrix(L2, ctx.basis, ctx.dual))
        assert is_block_circulant(lhs, 2, 2)


def test_rank_gcd_examples(F4):
    ctx = SubfieldContext(F4, 1, W)
    assert rank_gcd_check(W, ctx) == (2, 2)
    assert rank_gcd_check(1, ctx) == (1, 1)
    assert rank_gcd_check(0, ctx) == (0, 0)
    with pytest.raises(ValueError):
        rank_gcd_check(1, SubfieldContext.default(binary_tower(4), 2))


def test_poly_gcd(F4):
    # (1 + x) divides x^2 - 1 over GF(2)
    assert poly_gcd(F4, [1, 1], [1, 0, 1]) == [1, 1]
    assert poly_gcd(F4, [], [1, 0, 1]) == [1, 0, 1]
    assert poly_gcd(F4, [1], [1, 0, 1]) == [1]


def test_three_way_equivalence_sampled():
    res = subfield_structure(seed=7, scale=0.05, exhaustive=False)
    assert res.passed, res.failures[:3]
