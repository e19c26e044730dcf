import random

import pytest
from hypothesis import given

from conftest import TOWERS, W, W1, tower_and_polys
from linfield import linalg
from linfield.dickson import (
    DicksonMatrix,
    adjugate,
    adjugate_poly,
    determinant,
    from_poly,
    inverse_poly,
    is_sigma_circulant,
    laplace_det,
    matrix_rep,
    matrix_rep_direct,
    rank,
    to_poly,
)
from linfield.errors import NotABasis, NotAPermutation, NotDickson
from linfield.linearized import LinPoly, compose, evaluate, random_poly, rank_bruteforce


def test_worked_examples(F4, L_a):
    D = from_poly(L_a)
    assert D.full() == [[W, 1], [1, W1]]
    assert determinant(D) == 0 and rank(D) == 1
    assert adjugate(D).full() == [[W1, 1], [1, W]]
    x2 = LinPoly(F4, (0, 1))
    assert from_poly(x2).full() == [[0, 1], [1, 0]]
    assert determinant(from_poly(x2)) == 1
    assert adjugate_poly(L_a) == LinPoly(F4, (W1, 1))
    assert adjugate_poly(LinPoly.identity(F4)) == LinPoly.identity(F4)
    assert inverse_poly(x2) == x2
    assert inverse_poly(LinPoly(F4, (W, 0))) == LinPoly(F4, (W1, 0))
    with pytest.raises(NotAPermutation):
        inverse_poly(L_a)
    assert matrix_rep(LinPoly(F4, (W, 0)), [1, W]) == [[0, 1], [1, 1]]
    assert matrix_rep(LinPoly.identity(F4), [1, W]) == linalg.identity(2)
    assert linalg.rank(F4, matrix_rep(L_a, [1, W])) == 1


def test_identity_matrix(F4):
    D = DicksonMatrix.identity(F4)
    assert D.full() == linalg.identity(2)
    assert adjugate(D) == D and determinant(D) == 1


def test_round_trip_and_rejection():
    F = TOWERS["gf9"]
    rng = random.Random(3)
    for _ in range(100):
        L = random_poly(F, rng)
        assert to_poly(from_poly(L)) == L
        assert to_poly(from_poly(L).full(), F) == L
    with pytest.raises(NotDickson):
        DicksonMatrix.from_matrix(F, [[1, 0], [0, 2]])


def test_matrix_rep_rejects_dependent_basis(F4, L_a):
    with pytest.raises(NotABasis):
        matrix_rep(L_a, [1, 1])
    with pytest.raises(NotABasis):
        matrix_rep(L_a, [1])


@given(tower_and_polys(2))
def test_homomorphism(tp):
    F, L1, L2 = tp
    lhs = from_poly(compose(L1, L2)).full()
    assert lhs == linalg.matmul(F, from_poly(L1).full(), from_poly(L2).full())


@given(tower_and_polys(1))
def test_rank_det_adjugate(tp):
    F, L = tp
    D = from_poly(L)
    d = determinant(D)
    assert rank(D) == rank_bruteforce(L)
    assert F.frobenius(d) == d and laplace_det(L) == d
    assert is_sigma_circulant(F, linalg.adjugate(F, D.full()))
    La = adjugate_poly(L)
    assert compose(L, La) == compose(La, L) == LinPoly.monomial(F, d, 0)
    if d:
        Li = inverse_poly(L)
        assert all(evaluate(Li, evaluate(L, x)) == x for x in list(F.elements())[:64])


@given(tower_and_polys(1))
def test_matrix_rep_paths_agree(tp):
    F, L = tp
    rng = random.Random(str(L.coeffs))
    while True:
        basis = [F.random_element(rng) for _ in range(F.n)]
        if linalg.rank(F, [list(F.coords(b)) for b in basis]) == F.n:
            break
    M = matrix_rep(L, basis)
    assert all(x < F.q for row in M for x in row)
    assert M == matrix_rep_direct(L, basis)
