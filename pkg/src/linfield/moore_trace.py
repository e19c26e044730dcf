"""Moore matrices, dual bases and trace-form representations.

A trace form is a list of pairs ``(omega, theta)`` standing for the map
``x -> sum tr(omega x) theta``.  Three canonical forms exist for a fixed basis
``beta`` with dual ``beta*``:

* full form:      ``L(x) = sum tr(beta_i x) alpha_i``,  ``alpha_i = L(beta_i*)``
* dual-side form: ``L(x) = sum tr(alpha'_i x) beta_i``
* compact form:   exactly ``rank(L)`` pairs, both sides independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from linfield import linalg
from linfield.errors import NotABasis
from linfield.finite_field import Elem, FieldTower
from linfield.linearized import (
    LinPoly,
    compose_all,
    evaluate,
    gf_rank,
    monomial_basis,
)


@dataclass(frozen=True)
class MooreMatrix:
    """``(alpha_j^(q^i))`` for ``i < rows``; square unless ``rows`` is given."""

    tower: FieldTower
    generators: tuple[int, ...]
    rows: int | None = None

    def full(self) -> list[list[int]]:
        k = len(self.generators) if self.rows is None else self.rows
        frob = self.tower.frobenius
        return [[frob(a, i) for a in self.generators] for i in range(k)]


def moore_rank(tower: FieldTower, gens: Sequence[Elem]) -> int:
    if not gens:
        return 0
    return linalg.rank(tower, MooreMatrix(tower, tuple(gens)).full())


def coordinate_rank(tower: FieldTower, gens: Sequence[Elem]) -> int:
    return gf_rank(tower, gens)


def _require_basis(tower: FieldTower, basis: Sequence[Elem]) -> list[list[int]]:
    if len(basis) != tower.n:
        raise NotABasis(f"need {tower.n} elements, got {len(basis)}")
    B = MooreMatrix(tower, tuple(basis)).full()
    if linalg.rank(tower, B) != tower.n:
        raise NotABasis("elements are linearly dependent over GF(q)")
    return B


def dual_basis(tower: FieldTower, basis: Sequence[Elem]) -> list[Elem]:
    """The ``beta*`` with ``tr(beta_i beta*_j) = delta_ij``: first column of the inverse Moore matrix."""
    B = _require_basis(tower, basis)
    return [row[0] for row in linalg.inverse(tower, B)]


def trace_pairing(tower: FieldTower, xs: Sequence[Elem], ys: Sequence[Elem]) -> list[list[int]]:
    return [[tower.trace(tower.mul(x, y)) for y in ys] for x in xs]


# -- trace forms ------------------------------------------------------------


@dataclass(frozen=True)
class TraceForm:
    tower: FieldTower
    pairs: tuple[tuple[int, int], ...] = field(default=())

    def __call__(self, x: Elem) -> Elem:
        F = self.tower
        return F.sum(F.mul(F.trace(F.mul(w, x)), t) for w, t in self.pairs)

    @property
    def omegas(self) -> list[Elem]:
        return [w for w, _ in self.pairs]

    @property
    def thetas(self) -> list[Elem]:
        return [t for _, t in self.pairs]

    def __len__(self) -> int:
        return len(self.pairs)


def from_trace_form(tf: TraceForm) -> LinPoly:
    """Coefficient ``j`` is ``sum_l theta_l * omega_l^(q^j)``."""
    F = tf.tower
    return LinPoly(
        F,
        tuple(F.sum(F.mul(t, F.frobenius(w, j)) for w, t in tf.pairs) for j in range(F.n)),
    )


def to_trace_form_full(L: LinPoly, basis: Sequence[Elem]) -> TraceForm:
    """``L(x) = sum tr(beta_i x) alpha_i`` with ``alpha_i = L(beta_i*)``."""
    F = L.tower
    dual = dual_basis(F, basis)
    return TraceForm(F, tuple((b, evaluate(L, d)) for b, d in zip(basis, dual)))


def to_trace_form_dualside(L: LinPoly, basis: Sequence[Elem]) -> TraceForm:
    """``L(x) = sum tr(alpha'_i x) beta_i``.

    Solves ``B X = D_L`` where ``B`` is the Moore matrix of the basis; row ``i``
    of ``X`` is ``(alpha'_i^(q^j))_j``.
    """
    from linfield.dickson import DicksonMatrix

    F = L.tower
    B = _require_basis(F, basis)
    X = linalg.solve(F, B, DicksonMatrix.from_poly(L).full())
    return TraceForm(F, tuple((X[i][0], b) for i, b in enumerate(basis)))


def adjoint_alpha_prime(L: LinPoly, basis: Sequence[Elem]) -> list[Elem]:
    """Closed form ``alpha'_i = sum_k a_k^(q^(n-k)) (beta*_i)^(q^(n-k))`` (the trace adjoint of L at beta*_i)."""
    F = L.tower
    n = F.n
    dual = dual_basis(F, basis)
    return [
        F.sum(F.frobenius(F.mul(a, d), n - k) for k, a in enumerate(L.coeffs))
        for d in dual
    ]


def compact_form(L: LinPoly) -> TraceForm:
    """A representation with exactly ``rank(L)`` pairs.

    ``theta`` is the echelon basis of the image; ``omega_i`` collects the
    ``i``-th theta-coordinate of ``L(beta*_j)`` against ``beta_j`` for the
    monomial basis ``beta``.
    """
    F = L.tower
    basis = monomial_basis(F)
    dual = dual_basis(F, basis)
    images = [evaluate(L, d) for d in dual]
    R, pivots = linalg.rref(F, [list(F.coords(y)) for y in images])
    thetas = [F.from_coords(R[r]) for r in range(len(pivots))]
    pairs = []
    for i, pc in enumerate(pivots):
        # echelon rows are 1 at their own pivot and 0 at the others
        omega = F.sum(F.mul(F.coords(y)[pc], b) for y, b in zip(images, basis))
        pairs.append((omega, thetas[i]))
    return TraceForm(F, tuple(pairs))


def identity_form(tower: FieldTower, basis: Sequence[Elem]) -> TraceForm:
    """``x = sum tr(beta_i x) beta*_i``."""
    return TraceForm(tower, tuple(zip(basis, dual_basis(tower, basis))))


def inverse_via_dual(tf: TraceForm, basis: Sequence[Elem]) -> TraceForm:
    """Inverse of ``sum tr(beta_i x) alpha_i`` as ``sum tr(alpha*_i x) beta*_i``."""
    F = tf.tower
    if tf.omegas != list(basis):
        raise ValueError("trace form is not the full form over this basis")
    alpha_dual = dual_basis(F, tf.thetas)
    beta_dual = dual_basis(F, basis)
    return TraceForm(F, tuple(zip(alpha_dual, beta_dual)))


# -- Moore adjugate ---------------------------------------------------------


def sign_matrix(tower: FieldTower, n: int) -> list[Elem]:
    """Diagonal of ``S = diag((-1)^(i(n+1)))``: identity for odd ``n``, alternating for even."""
    minus_one = tower.neg(1)
    return [minus_one if (i * (n + 1)) % 2 else 1 for i in range(n)]


@dataclass(frozen=True)
class MooreAdjugate:
    cofactors: tuple[int, ...]
    signs: tuple[int, ...]
    identity_holds: bool


def moore_adjugate(tower: FieldTower, gens: Sequence[Elem]) -> MooreAdjugate:
    """Cofactors ``c_i`` of ``(0, i)`` in the Moore matrix ``A`` and the check ``adj(A) = (c_i^(q^j)) S``."""
    n = len(gens)
    A = MooreMatrix(tower, tuple(gens)).full()
    cof = [linalg.cofactor(tower, A, 0, i) if n > 1 else 1 for i in range(n)]
    S = sign_matrix(tower, n)
    predicted = [[tower.mul(tower.frobenius(cof[i], j), S[j]) for j in range(n)] for i in range(n)]
    return MooreAdjugate(tuple(cof), tuple(S), predicted == linalg.adjugate(tower, A))


# -- matrices under the dual basis and elementary decomposition ---------------


def b_matrix(L: LinPoly, basis: Sequence[Elem], dual: Sequence[Elem] | None = None) -> list[list[int]]:
    """Matrix of ``L`` under the dual basis: ``(alpha_0..alpha_{n-1}) = (beta*_0..) B``."""
    F = L.tower
    dual = dual_basis(F, basis) if dual is None else dual
    alphas = [evaluate(L, d) for d in dual]
    return [[F.trace(F.mul(b, a)) for a in alphas] for b in basis]


def a_matrix(L: LinPoly, basis: Sequence[Elem]) -> list[list[int]]:
    """``(alpha_0..alpha_{n-1}) = (beta_0..) A`` for the full-form alphas."""
    F = L.tower
    dual = dual_basis(F, basis)
    alphas = [evaluate(L, d) for d in dual]
    return [[F.trace(F.mul(d, a)) for a in alphas] for d in dual]


def poly_from_b_matrix(tower: FieldTower, M: Sequence[Sequence[int]], basis: Sequence[Elem]) -> LinPoly:
    """``sum_ij M_ij tr(beta_j x) beta*_i``: the polynomial whose dual-basis matrix is ``M``."""
    dual = dual_basis(tower, basis)
    pairs = [
        (basis[j], tower.mul(M[i][j], dual[i]))
        for i in range(tower.n)
        for j in range(tower.n)
        if M[i][j]
    ]
    return from_trace_form(TraceForm(tower, tuple(pairs)))


@dataclass(frozen=True)
class ElementaryFactor:
    """One of three elementary maps.

    ``swap``:  ``x - tr((beta_i - beta_j) x)(beta*_i - beta*_j)``  (rows i, j exchanged)
    ``scale``: ``x + a tr(beta_i x) beta*_i``                       (row i times 1 + a)
    ``add``:   ``x + tr(beta_i x) beta*_j``                         (matrix I + E_ji)
    """

    kind: str
    i: int
    j: int
    scalar: int
    poly: LinPoly
    matrix: tuple[tuple[int, ...], ...]
    matches_matrix: bool


@dataclass(frozen=True)
class ElementaryDecomposition:
    """``L = left[0] o ... o left[-1] o core o right[0] o ... o right[-1]``."""

    left: tuple[ElementaryFactor, ...]
    core: LinPoly
    rank: int
    right: tuple[ElementaryFactor, ...]

    def factors(self) -> list[LinPoly]:
        return [f.poly for f in self.left] + [self.core] + [f.poly for f in self.right]

    def recompose(self) -> LinPoly:
        return compose_all(self.factors())


def _elementary(tower, basis, dual, kind, i, j, scalar) -> ElementaryFactor:
    n = tower.n
    ident = LinPoly.identity(tower)
    M = linalg.identity(n)
    if kind == "swap":
        w = tower.sub(basis[i], basis[j])
        t = tower.neg(tower.sub(dual[i], dual[j]))
        pairs = ((w, t),)
        M[i][i] = M[j][j] = 0
        M[i][j] = M[j][i] = 1
    elif kind == "scale":
        pairs = ((basis[i], tower.mul(scalar, dual[i])),)
        M[i][i] = tower.add(1, scalar)
    else:
        pairs = ((basis[i], dual[j]),)
        M[j][i] = tower.add(M[j][i], 1)
    poly = ident + from_trace_form(TraceForm(tower, pairs))
    return ElementaryFactor(
        kind,
        i,
        j,
        scalar,
        poly,
        tuple(map(tuple, M)),
        poly == poly_from_b_matrix(tower, M, basis),
    )


def elementary_decompose(L: LinPoly, basis: Sequence[Elem]) -> ElementaryDecomposition:
    """Factor ``L`` into elementary maps around the rank-k core ``sum_{i<k} tr(beta_i x) beta*_i``.

    Gaussian elimination on the dual-basis matrix ``B_L`` records every row and
    column operation; the inverses of the row operations become the left
    factors and the inverses of the column operations the right ones.
    """
    F = L.tower
    n = F.n
    dual = dual_basis(F, basis)
    M = b_matrix(L, basis)

    def make(kind, i, j, scalar):
        return _elementary(F, basis, dual, kind, i, j, scalar)

    def expand(op) -> list[ElementaryFactor]:
        # op describes a matrix; return elementary factors whose product is it
        kind, i, j, s = op
        if kind == "swap":
            return [make("swap", i, j, 0)]
        if kind == "scale":
            return [] if s == 1 else [make("scale", i, i, F.sub(s, 1))]
        # I + s E_ji  =  S_i(1/s) (I + E_ji) S_i(s)
        if s == 1:
            return [make("add", i, j, 1)]
        return expand(("scale", i, i, F.inv(s))) + [make("add", i, j, 1)] + expand(("scale", i, i, s))

    def op_matrix(op) -> list[list[int]]:
        kind, i, j, s = op
        E = linalg.identity(n)
        if kind == "swap":
            E[i][i] = E[j][j] = 0
            E[i][j] = E[j][i] = 1
        elif kind == "scale":
            E[i][i] = s
        else:
            E[j][i] = s
        return E

    def inverse_op(op):
        kind, i, j, s = op
        if kind == "scale":
            return (kind, i, j, F.inv(s))
        if kind == "add":
            return (kind, i, j, F.neg(s))
        return op

    left: list[ElementaryFactor] = []
    right: list[ElementaryFactor] = []
    r = 0
    while r < n:
        pos = next(((i, j) for i in range(r, n) for j in range(r, n) if M[i][j]), None)
        if pos is None:
            break
        i, j = pos
        row_ops, col_ops = [], []
        if i != r:
            row_ops.append(("swap", r, i, 0))
        if j != r:
            col_ops.append(("swap", r, j, 0))
        for op in row_ops:
            M = linalg.matmul(F, op_matrix(op), M)
        for op in col_ops:
            M = linalg.matmul(F, M, op_matrix(op))
        more_rows = []
        if M[r][r] != 1:
            more_rows.append(("scale", r, r, F.inv(M[r][r])))
        for op in more_rows:
            M = linalg.matmul(F, op_matrix(op), M)
        row_ops += more_rows
        clear_rows = [("add", r, k, F.neg(M[k][r])) for k in range(n) if k != r and M[k][r]]
        for op in clear_rows:
            M = linalg.matmul(F, op_matrix(op), M)
        row_ops += clear_rows
        clear_cols = [("add", k, r, F.neg(M[r][k])) for k in range(n) if k != r and M[r][k]]
        for op in clear_cols:
            M = linalg.matmul(F, M, op_matrix(op))
        col_ops += clear_cols
        for op in row_ops:
            left.extend(expand(inverse_op(op)))
        for op in col_ops:
            right[0:0] = expand(inverse_op(op))
        r += 1

    k = r
    assert M == [[int(a == b and a < k) for b in range(n)] for a in range(n)]
    core = from_trace_form(TraceForm(F, tuple((basis[i], dual[i]) for i in range(k))))
    return ElementaryDecomposition(tuple(left), core, k, tuple(right))
