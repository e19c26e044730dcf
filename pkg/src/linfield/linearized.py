"""Reduced linearized polynomials ``sum a_i x^(q^i)``, ``0 <= i < n``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from linfield import linalg
from linfield.errors import ScalarNotInBaseField, TowerMismatch
from linfield.finite_field import Elem, FieldTower


@dataclass(frozen=True)
class LinPoly:
    tower: FieldTower
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.tower.n:
            raise TowerMismatch(f"expected {self.tower.n} coefficients, got {len(self.coeffs)}")
        for a in self.coeffs:
            self.tower.check(a)

    @classmethod
    def from_coeffs(cls, tower: FieldTower, coeffs: Iterable[int]) -> "LinPoly":
        """Accept any number of coefficients; terms x^(q^i) with i >= n fold onto i mod n."""
        folded = [0] * tower.n
        for i, a in enumerate(coeffs):
            folded[i % tower.n] = tower.add(folded[i % tower.n], tower.check(a))
        return cls(tower, tuple(folded))

    @classmethod
    def zero(cls, tower: FieldTower) -> "LinPoly":
        return cls(tower, (0,) * tower.n)

    @classmethod
    def identity(cls, tower: FieldTower) -> "LinPoly":
        return cls.monomial(tower, 1, 0)

    @classmethod
    def monomial(cls, tower: FieldTower, a: Elem, i: int) -> "LinPoly":
        """``a * x^(q^i)``."""
        cs = [0] * tower.n
        cs[i % tower.n] = a
        return cls(tower, tuple(cs))

    @property
    def n(self) -> int:
        return self.tower.n

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, x: Elem) -> Elem:
        return evaluate(self, x)

    def __add__(self, other: "LinPoly") -> "LinPoly":
        return add(self, other)

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        return sub(self, other)

    def __neg__(self) -> "LinPoly":
        return LinPoly(self.tower, tuple(self.tower.neg(a) for a in self.coeffs))

    def __matmul__(self, other: "LinPoly") -> "LinPoly":
        return compose(self, other)

    def __repr__(self) -> str:
        terms = [f"{a}*x^(q^{i})" for i, a in enumerate(self.coeffs) if a]
        return f"LinPoly({' + '.join(terms) or '0'})"


def _same_tower(*polys: LinPoly) -> FieldTower:
    tower = polys[0].tower
    for P in polys[1:]:
        if P.tower != tower:
            raise TowerMismatch("operands live in different towers")
    return tower


def evaluate(L: LinPoly, x: Elem) -> Elem:
    F = L.tower
    F.check(x)
    add, mul, frob = F.add, F.mul, F.frobenius
    acc = 0
    for i, a in enumerate(L.coeffs):
        if a:
            acc = add(acc, mul(a, frob(x, i)))
    return acc


def add(L1: LinPoly, L2: LinPoly) -> LinPoly:
    F = _same_tower(L1, L2)
    return LinPoly(F, tuple(F.add(a, b) for a, b in zip(L1.coeffs, L2.coeffs)))


def sub(L1: LinPoly, L2: LinPoly) -> LinPoly:
    F = _same_tower(L1, L2)
    return LinPoly(F, tuple(F.sub(a, b) for a, b in zip(L1.coeffs, L2.coeffs)))


def scale(c: Elem, L: LinPoly) -> LinPoly:
    """Multiply by a scalar of GF(q); other scalars would not give an F_q-algebra action."""
    F = L.tower
    F.check(c)
    if F.frobenius(c) != c:
        raise ScalarNotInBaseField(f"{c} is not fixed by x -> x^q")
    return LinPoly(F, tuple(F.mul(c, a) for a in L.coeffs))


def left_mul(c: Elem, L: LinPoly) -> LinPoly:
    """``c * L(x)`` for any ``c`` in GF(q^n), i.e. composition with ``c x`` on the left."""
    F = L.tower
    return LinPoly(F, tuple(F.mul(c, a) for a in L.coeffs))


def compose(L1: LinPoly, L2: LinPoly) -> LinPoly:
    """``L1(L2(x))``: coefficient ``i`` is ``sum_k a_k b_{i-k}^(q^k)``."""
    F = _same_tower(L1, L2)
    n = F.n
    add, mul, frob = F.add, F.mul, F.frobenius
    a, b = L1.coeffs, L2.coeffs
    out = []
    for i in range(n):
        acc = 0
        for k in range(n):
            if a[k]:
                bk = b[(i - k) % n]
                if bk:
                    acc = add(acc, mul(a[k], frob(bk, k)))
        out.append(acc)
    return LinPoly(F, tuple(out))


def compose_all(polys: Sequence[LinPoly]) -> LinPoly:
    """``polys[0] o polys[1] o ... o polys[-1]`` (the last one is applied first)."""
    out = polys[-1]
    for P in reversed(polys[:-1]):
        out = compose(P, out)
    return out


# -- GF(q)-linear algebra of elements --------------------------------------


def monomial_basis(tower: FieldTower) -> list[Elem]:
    return [tower.from_coords([int(i == j) for j in range(tower.n)]) for i in range(tower.n)]


def gf_rank(tower: FieldTower, elems: Sequence[Elem]) -> int:
    """GF(q)-rank of a set of elements, by elimination on their coordinates."""
    return linalg.rank(tower, [list(tower.coords(a)) for a in elems])


def gf_span_basis(tower: FieldTower, elems: Sequence[Elem]) -> list[Elem]:
    """Echelon basis of the GF(q)-span (pivots at the lowest coordinate first)."""
    if not elems:
        return []
    R, pivots = linalg.rref(tower, [list(tower.coords(a)) for a in elems])
    return [tower.from_coords(R[r]) for r in range(len(pivots))]


def spans_equal(tower: FieldTower, xs: Sequence[Elem], ys: Sequence[Elem]) -> bool:
    return gf_span_basis(tower, xs) == gf_span_basis(tower, ys)


def coordinates(tower: FieldTower, x: Elem, basis: Sequence[Elem]) -> list[int]:
    """GF(q) coordinates of ``x`` with respect to an arbitrary basis."""
    A = linalg.transpose([list(tower.coords(b)) for b in basis])
    col = [[c] for c in tower.coords(x)]
    return [r[0] for r in linalg.solve(tower, A, col)]


def combine(tower: FieldTower, cs: Sequence[int], basis: Sequence[Elem]) -> Elem:
    return tower.sum(tower.mul(c, b) for c, b in zip(cs, basis))


# -- rank, kernel, image ----------------------------------------------------


def _image_coords(L: LinPoly, basis: Sequence[Elem] | None) -> list[list[int]]:
    F = L.tower
    basis = monomial_basis(F) if basis is None else basis
    return [list(F.coords(evaluate(L, b))) for b in basis]


def rank_bruteforce(L: LinPoly, basis: Sequence[Elem] | None = None) -> int:
    """Dimension over GF(q) of the span of the images of a basis."""
    return linalg.rank(L.tower, _image_coords(L, basis))


def image_basis(L: LinPoly) -> list[Elem]:
    F = L.tower
    R, pivots = linalg.rref(F, _image_coords(L, None))
    return [F.from_coords(R[r]) for r in range(len(pivots))]


def kernel_basis(L: LinPoly, basis: Sequence[Elem] | None = None) -> list[Elem]:
    F = L.tower
    basis = monomial_basis(F) if basis is None else basis
    A = linalg.transpose(_image_coords(L, basis))
    return [combine(F, v, basis) for v in linalg.nullspace(F, A)]


def kernel_enumerate(L: LinPoly) -> list[Elem]:
    """All roots of ``L`` in GF(q^n), by exhaustive evaluation."""
    return [x for x in L.tower.elements() if not evaluate(L, x)]


def image_enumerate(L: LinPoly) -> set[Elem]:
    return {evaluate(L, x) for x in L.tower.elements()}


def is_permutation(L: LinPoly) -> bool:
    """Dickson's criterion: ``L`` permutes GF(q^n) iff its Dickson matrix is non-singular."""
    from linfield.dickson import DicksonMatrix, rank

    return rank(DicksonMatrix.from_poly(L)) == L.tower.n


def all_polys(tower: FieldTower):
    """Every element of the ring (``q^(n*n)`` polynomials); small towers only."""
    from itertools import product

    for cs in product(tower.elements(), repeat=tower.n):
        yield LinPoly(tower, cs)


def random_poly(tower: FieldTower, rng) -> LinPoly:
    return LinPoly(tower, tuple(rng.randrange(tower.order) for _ in range(tower.n)))
