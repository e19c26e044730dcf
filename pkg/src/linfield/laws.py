"""Exhaustive and sampled law checks over small towers.

Each law returns a :class:`LawResult`.  The suite backs ``linfield selftest``
and the acceptance tests; every check compares a library path against an
independent one (brute force, full matrix products, pointwise evaluation).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Callable, Iterable

from linfield import linalg
from linfield.dickson import (
    DicksonMatrix,
    adjugate,
    adjugate_poly,
    determinant,
    dickson_mul,
    first_column_cofactors,
    inverse_poly,
    is_sigma_circulant,
    laplace_det,
    matrix_rep,
    matrix_rep_direct,
    rank,
)
from linfield.finite_field import (
    FieldTower,
    binary_tower,
    gf4,
    gf8,
    gf9,
    gf16_over_gf4,
    ternary_tower,
)
from linfield.linearized import (
    LinPoly,
    all_polys,
    compose,
    evaluate,
    gf_rank,
    image_basis,
    kernel_basis,
    rank_bruteforce,
    random_poly,
    spans_equal,
)
from linfield.moore_trace import (
    TraceForm,
    compact_form,
    coordinate_rank,
    dual_basis,
    from_trace_form,
    identity_form,
    inverse_via_dual,
    moore_adjugate,
    moore_rank,
    to_trace_form_dualside,
    to_trace_form_full,
)
from linfield.skew import chain_conditions_hold, factor_chain, rank_via_gcd
from linfield.subfield import (
    SubfieldContext,
    alpha_pattern_holds,
    b_matrix,
    is_block_circulant,
    is_subfield_poly,
    rank_gcd_check,
)


@dataclass
class LawResult:
    name: str
    passed: bool
    cases: int
    seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  first failure: {self.failures[0]}" if self.failures else ""
        return f"{status}  {self.name:<44} {self.cases:>7} cases  {self.seconds:6.2f} s{extra}"


class _Tally:
    def __init__(self, name: str) -> None:
        self.name = name
        self.cases = 0
        self.failures: list[str] = []
        self.t0 = time.perf_counter()

    def check(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(what)

    def result(self) -> LawResult:
        return LawResult(
            self.name, not self.failures, self.cases, time.perf_counter() - self.t0, self.failures
        )


def _rng(seed: int, label: str) -> random.Random:
    return random.Random(f"{seed}:{label}")


def polys(tower: FieldTower, count: int | None, rng: random.Random) -> Iterable[LinPoly]:
    """All polynomials when ``count`` is None, otherwise ``count`` random ones."""
    if count is None:
        return all_polys(tower)
    return [random_poly(tower, rng) for _ in range(count)]


def random_basis(tower: FieldTower, rng: random.Random) -> list[int]:
    while True:
        basis = [tower.random_element(rng) for _ in range(tower.n)]
        if gf_rank(tower, basis) == tower.n:
            return basis


def all_bases(tower: FieldTower) -> list[list[int]]:
    return [list(b) for b in permutations(tower.elements(), tower.n) if gf_rank(tower, b) == tower.n]


def _x_times(tower: FieldTower, c: int) -> LinPoly:
    return LinPoly.monomial(tower, c, 0)


def rank_populations(scale: float = 1.0) -> list[tuple[str, FieldTower, int | None]]:
    k = max(1, int(1000 * scale))
    return [
        ("GF(4)", gf4(), None),
        ("GF(8)", gf8(), None),
        ("GF(9)", gf9(), k),
        ("GF(2^6)", binary_tower(6), k),
    ]


# -- individual laws -------------------------------------------------------


def dickson_homomorphism(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Dickson matrix of a composition equals the product of Dickson matrices."""
    t = _Tally("dickson homomorphism (composition -> product)")
    k = max(1, int(10_000 * scale))
    for label, F, count in [("GF(4)", gf4(), None), ("GF(8)", gf8(), k), ("GF(9)", gf9(), k), ("GF(16)/GF(4)", gf16_over_gf4(), k)]:
        rng = _rng(seed, "hom" + label)
        if count is None:
            pairs = product(all_polys(F), repeat=2)
        else:
            pairs = ((random_poly(F, rng), random_poly(F, rng)) for _ in range(count))
        for L1, L2 in pairs:
            D1, D2 = DicksonMatrix.from_poly(L1), DicksonMatrix.from_poly(L2)
            lhs = DicksonMatrix.from_poly(compose(L1, L2))
            ok = lhs.full() == linalg.matmul(F, D1.full(), D2.full()) and lhs == dickson_mul(D1, D2)
            t.check(ok, f"{label} {L1.coeffs} {L2.coeffs}")
    return t.result()


def rank_agreement(seed: int = 0, scale: float = 1.0) -> LawResult:
    """rank(D_L) = brute-force rank = n - deg rgcd; det(D_L) lies in GF(q)."""
    t = _Tally("rank agreement (Dickson / brute force / gcd)")
    for label, F, count in rank_populations(scale):
        rng = _rng(seed, "rank" + label)
        for L in polys(F, count, rng):
            D = DicksonMatrix.from_poly(L)
            r1, r2, r3 = rank(D), rank_bruteforce(L), rank_via_gcd(L)
            d = linalg.det(F, D.full())
            t.check(r1 == r2 == r3 and F.frobenius(d) == d, f"{label} {L.coeffs}: {r1},{r2},{r3} det={d}")
    return t.result()


def inversion(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Composition inverse from first-column cofactors; Laplace det = elimination det."""
    t = _Tally("permutation inverse via cofactors")
    for label, F, count in rank_populations(scale):
        rng = _rng(seed, "inv" + label)
        ident = LinPoly.identity(F)
        for L in polys(F, count, rng):
            D = DicksonMatrix.from_poly(L)
            d = determinant(D)
            t.check(laplace_det(L) == d, f"{label} {L.coeffs}: Laplace det")
            if not d:
                continue
            Li = inverse_poly(L)
            t.check(compose(L, Li) == ident and compose(Li, L) == ident, f"{label} {L.coeffs}: inverse")
            if F.q == 2:
                t.check(d == 1, f"{label} {L.coeffs}: det {d} != 1 over q = 2")
    return t.result()


def _adjugate_closed_form(F: FieldTower, gamma: int) -> LinPoly:
    n, q = F.n, F.q
    sign = 1 if (n - 1) % 2 == 0 else F.neg(1)
    return LinPoly(F, tuple(F.mul(sign, F.pow(gamma, 1 - q ** (i + 1))) for i in range(n)))


def adjugate_polynomial(seed: int = 0, scale: float = 1.0) -> LawResult:
    """L o L* = L* o L = det(L) x; rank n-1 gives rank-1 L* swapping kernel and image."""
    t = _Tally("adjugate polynomial identities")
    for label, F, count in rank_populations(scale):
        rng = _rng(seed, "adj" + label)
        n = F.n
        for L in polys(F, count, rng):
            La = adjugate_poly(L)
            d = determinant(DicksonMatrix.from_poly(L))
            dx = _x_times(F, d)
            t.check(compose(L, La) == dx and compose(La, L) == dx, f"{label} {L.coeffs}: L o L*")
            if rank_bruteforce(L) == n - 1:
                ok = (
                    rank_bruteforce(La) == 1
                    and spans_equal(F, image_basis(La), kernel_basis(L))
                    and spans_equal(F, kernel_basis(La), image_basis(L))
                )
                t.check(ok, f"{label} {L.coeffs}: kernel/image exchange")
    for label, F in [("GF(4)", gf4()), ("GF(8)", gf8()), ("GF(9)", gf9())]:
        for gamma in range(1, F.order):
            cs = [0] * F.n
            cs[0] = F.neg(F.pow(gamma, F.q - 1))
            cs[1] = 1
            L = LinPoly(F, tuple(cs))
            t.check(adjugate_poly(L) == _adjugate_closed_form(F, gamma), f"{label} gamma={gamma}: closed form")
    return t.result()


def adjugate_structure(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Adjugates of Dickson matrices are Dickson; D adj(D) = adj(D) D = det(D) I."""
    t = _Tally("Dickson adjugate is sigma-circulant")
    k = max(1, int(1000 * scale))
    pops = [("GF(4)", gf4(), None), ("GF(8)", gf8(), None), ("GF(9)", gf9(), k), ("GF(2^6)", binary_tower(6), max(1, k // 5))]
    for label, F, count in pops:
        rng = _rng(seed, "adjs" + label)
        for L in polys(F, count, rng):
            M = DicksonMatrix.from_poly(L).full()
            A = linalg.adjugate(F, M)
            d = linalg.det(F, M)
            dI = linalg.scale(F, d, linalg.identity(F.n))
            ok = (
                is_sigma_circulant(F, A)
                and linalg.matmul(F, M, A) == dI
                and linalg.matmul(F, A, M) == dI
                and A[0] == list(first_column_cofactors(L))
            )
            t.check(ok, f"{label} {L.coeffs}")
    return t.result()


def moore_sign_matrix(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Adjugate of a Moore matrix is (cofactor^(q^j)) S; bases map to cofactor bases."""
    t = _Tally("moore adjugate sign matrix")
    k = max(1, int(500 * scale))
    cases = [
        ("q=2 n=2", binary_tower(2), None),
        ("q=2 n=3", binary_tower(3), None),
        ("q=2 n=4", binary_tower(4), k),
        ("q=3 n=2", ternary_tower(2), None),
        ("q=3 n=3", ternary_tower(3), k),
    ]
    for label, F, count in cases:
        rng = _rng(seed, "moore" + label)
        if count is None:
            gens_iter = product(F.elements(), repeat=F.n)
        else:
            gens_iter = ([F.random_element(rng) for _ in range(F.n)] for _ in range(count))
        for gens in gens_iter:
            res = moore_adjugate(F, list(gens))
            t.check(res.identity_holds, f"{label} {tuple(gens)}")
            if gf_rank(F, gens) == F.n:
                t.check(moore_rank(F, res.cofactors) == F.n, f"{label} {tuple(gens)}: cofactor basis")
    F = gf4()
    for basis in all_bases(F):
        t.check(gf_rank(F, moore_adjugate(F, basis).cofactors) == F.n, f"GF(4) basis {basis}")
    return t.result()


def moore_rank_law(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Moore-matrix rank equals coordinate rank for generator tuples."""
    t = _Tally("moore rank equals GF(q)-rank")
    F = gf4()
    for k in range(1, 4):
        for gens in product(F.elements(), repeat=k):
            t.check(moore_rank(F, gens) == coordinate_rank(F, gens), f"GF(4) {gens}")
    for label, F in [("GF(8)", gf8()), ("GF(9)", gf9())]:
        rng = _rng(seed, "mr" + label)
        for _ in range(max(1, int(300 * scale))):
            gens = [F.random_element(rng) for _ in range(rng.randint(1, F.n + 1))]
            t.check(moore_rank(F, gens) == coordinate_rank(F, gens), f"{label} {gens}")
    return t.result()


def _pointwise_equal(F: FieldTower, f: Callable[[int], int], g: Callable[[int], int]) -> bool:
    return all(f(x) == g(x) for x in F.elements())


def _trace_form_case(t: _Tally, label: str, F: FieldTower, L: LinPoly, basis: list[int], rng) -> None:
    k = rank_bruteforce(L)
    full = to_trace_form_full(L, basis)
    dualside = to_trace_form_dualside(L, basis)
    compact = compact_form(L)
    tag = f"{label} {L.coeffs} basis={basis}"
    t.check(from_trace_form(full) == L and from_trace_form(dualside) == L, tag + ": round trip")
    t.check(_pointwise_equal(F, full, L) and _pointwise_equal(F, dualside, L), tag + ": pointwise")
    t.check(gf_rank(F, full.thetas) == k and gf_rank(F, dualside.omegas) == k, tag + ": alpha ranks")
    t.check(
        len(compact) == k
        and gf_rank(F, compact.omegas) == k
        and gf_rank(F, compact.thetas) == k
        and from_trace_form(compact) == L,
        tag + ": compact form",
    )
    # uniqueness: changing one coefficient of either full form changes the map
    i = rng.randrange(F.n)
    delta = F.random_element(rng, nonzero=True)
    bumped = list(full.pairs)
    bumped[i] = (bumped[i][0], F.add(bumped[i][1], delta))
    bumped_dual = list(dualside.pairs)
    bumped_dual[i] = (F.add(bumped_dual[i][0], delta), bumped_dual[i][1])
    t.check(
        not _pointwise_equal(F, TraceForm(F, tuple(bumped)), L)
        and not _pointwise_equal(F, TraceForm(F, tuple(bumped_dual)), L),
        tag + ": uniqueness",
    )
    ident = identity_form(F, basis)
    t.check(all(ident(x) == x for x in F.elements()), tag + ": identity decomposition")
    if k == F.n:
        inv = inverse_via_dual(full, basis)
        t.check(
            all(inv(full(x)) == x for x in F.elements()) and from_trace_form(inv) == inverse_poly(L),
            tag + ": inverse via dual",
        )


def trace_forms(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Full, dual-side and compact trace forms: round trips, ranks, uniqueness, inverses."""
    t = _Tally("trace form representations")
    F = gf4()
    rng = _rng(seed, "tf-gf4")
    bases = all_bases(F)
    for L in all_polys(F):
        for basis in bases:
            _trace_form_case(t, "GF(4)", F, L, basis, rng)
    k = max(1, int(1000 * scale))
    for label, F in [("GF(8)", gf8()), ("GF(9)", gf9())]:
        rng = _rng(seed, "tf" + label)
        for _ in range(k):
            _trace_form_case(t, label, F, random_poly(F, rng), random_basis(F, rng), rng)
    # no representation with fewer pairs than the rank exists (GF(4): at most one pair below n)
    F = gf4()
    one_pair = {from_trace_form(TraceForm(F, ((w, th),))) for w in F.elements() for th in F.elements()}
    for L in all_polys(F):
        k = rank_bruteforce(L)
        t.check(k >= 2 or L in one_pair, f"GF(4) {L.coeffs}: reachable by {k} pairs")
        if k == 2:
            t.check(L not in one_pair, f"GF(4) {L.coeffs}: rank 2 from one pair")
    return t.result()


def _random_rank_deficient(F: FieldTower, rng: random.Random) -> LinPoly:
    while True:
        L = random_poly(F, rng)
        if rank_bruteforce(L) == F.n - 1:
            return L


def factorization_chain(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Rank n-1 polynomials factor as permutation o kernel factors, exactly."""
    t = _Tally("rank n-1 factorization chain")
    pops = [("GF(4)", gf4(), None), ("GF(8)", gf8(), None), ("GF(9)", gf9(), max(1, int(500 * scale)))]
    for label, F, count in pops:
        rng = _rng(seed, "chain" + label)
        if count is None:
            population = [L for L in all_polys(F) if rank_bruteforce(L) == F.n - 1]
        else:
            population = [_random_rank_deficient(F, rng) for _ in range(count)]
        for L in population:
            chain = factor_chain(L)
            ok = (
                chain.recompose() == L
                and rank_bruteforce(chain.permutation) == F.n
                and chain_conditions_hold(chain, L)
            )
            t.check(ok, f"{label} {L.coeffs}")
    return t.result()


def _random_subfield_poly(F: FieldTower, m: int, rng: random.Random) -> LinPoly:
    # GF(q^m) is the image of the relative trace down to it
    return LinPoly(F, tuple(F.rel_trace(F.random_element(rng), m) for _ in range(F.n)))


def subfield_structure(seed: int = 0, scale: float = 1.0, exhaustive: bool = True) -> LawResult:
    """Subfield coefficients <=> alpha pattern <=> block-circulant B_L; B is multiplicative."""
    t = _Tally("subfield / alpha pattern / block circulant")
    F = binary_tower(4)
    for m in (1, 2):
        ctx = SubfieldContext.default(F, m)
        rng = _rng(seed, f"sub4-{m}")
        population = all_polys(F) if exhaustive else polys(F, 2000, rng)
        for L in population:
            a = is_subfield_poly(L, m)
            b = alpha_pattern_holds(L, ctx)
            c = is_block_circulant(b_matrix(L, ctx.basis, ctx.dual), ctx.t, m)
            t.check(a == b == c, f"n=4 m={m} {L.coeffs}: {a},{b},{c}")
    F = binary_tower(6)
    k = max(1, int(300 * scale))
    for m in (1, 2, 3):
        ctx = SubfieldContext.default(F, m)
        rng = _rng(seed, f"sub6-{m}")
        population = [_random_subfield_poly(F, m, rng) for _ in range(k)] + [random_poly(F, rng) for _ in range(k)]
        for L in population:
            a = is_subfield_poly(L, m)
            b = alpha_pattern_holds(L, ctx)
            c = is_block_circulant(b_matrix(L, ctx.basis, ctx.dual), ctx.t, m)
            t.check(a == b == c, f"n=6 m={m} {L.coeffs}: {a},{b},{c}")
    F = binary_tower(4)
    for m in (1, 2):
        ctx = SubfieldContext.default(F, m)
        rng = _rng(seed, f"mult-{m}")
        for _ in range(50):
            L1, L2 = _random_subfield_poly(F, m, rng), _random_subfield_poly(F, m, rng)
            B1 = b_matrix(L1, ctx.basis, ctx.dual)
            B2 = b_matrix(L2, ctx.basis, ctx.dual)
            B12 = b_matrix(compose(L1, L2), ctx.basis, ctx.dual)
            t.check(B12 == linalg.matmul(F, B1, B2) and is_block_circulant(B12, ctx.t, m), f"m={m} {L1.coeffs} {L2.coeffs}")
    return t.result()


def conjugate_rank_gcd(seed: int = 0, scale: float = 1.0) -> LawResult:
    """Rank of the conjugates of alpha equals n - deg gcd(sum tr(alpha beta^(q^i)) x^i, x^n - 1)."""
    t = _Tally("conjugate rank via circulant gcd")
    for label, F in [("GF(4)", binary_tower(2)), ("GF(8)", binary_tower(3)), ("GF(16)", binary_tower(4))]:
        ctx = SubfieldContext.default(F, 1)
        for alpha in F.elements():
            lhs, rhs = rank_gcd_check(alpha, ctx)
            t.check(lhs == rhs, f"{label} alpha={alpha}: {lhs} vs {rhs}")
    return t.result()


def basis_conjugation(seed: int = 0, scale: float = 1.0) -> LawResult:
    """B^-1 D_L B (B the Moore matrix of a basis) is over GF(q) and equals the coordinate matrix."""
    t = _Tally("basis conjugation gives coordinate matrix")
    k = max(1, int(100 * scale))
    for label, F in [("GF(4)", gf4()), ("GF(8)", gf8()), ("GF(9)", gf9()), ("GF(16)/GF(4)", gf16_over_gf4()), ("GF(2^6)", binary_tower(6))]:
        rng = _rng(seed, "conj" + label)
        for _ in range(k):
            L, basis = random_poly(F, rng), random_basis(F, rng)
            M = matrix_rep(L, basis)
            ok = all(x < F.q for row in M for x in row) and M == matrix_rep_direct(L, basis)
            t.check(ok, f"{label} {L.coeffs} basis={basis}")
    return t.result()


LAWS: dict[str, Callable[..., LawResult]] = {
    "dickson-homomorphism": dickson_homomorphism,
    "rank-agreement": rank_agreement,
    "inversion": inversion,
    "adjugate-polynomial": adjugate_polynomial,
    "adjugate-structure": adjugate_structure,
    "moore-sign-matrix": moore_sign_matrix,
    "moore-rank": moore_rank_law,
    "trace-forms": trace_forms,
    "factorization-chain": factorization_chain,
    "subfield-structure": subfield_structure,
    "conjugate-rank-gcd": conjugate_rank_gcd,
    "basis-conjugation": basis_conjugation,
}


def run_law(name: str, seed: int = 0, scale: float = 1.0) -> LawResult:
    return LAWS[name](seed=seed, scale=scale)


@dataclass(frozen=True)
class SuiteConfig:
    """How much of the law suite to run; ``scale`` multiplies every sampled population."""

    seed: int = 0
    scale: float = 1.0
    laws: tuple[str, ...] = tuple(LAWS)
    jobs: int = 1

    def __post_init__(self) -> None:
        unknown = [n for n in self.laws if n not in LAWS]
        if unknown:
            raise KeyError(", ".join(unknown))


def run_suite(config: SuiteConfig = SuiteConfig(), on_result: Callable[[LawResult], None] | None = None) -> list[LawResult]:
    """Run the configured laws, in worker processes when ``jobs > 1``."""
    names = list(config.laws)
    if config.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(config.jobs) as pool:
            results = list(pool.map(run_law, names, [config.seed] * len(names), [config.scale] * len(names)))
        if on_result:
            for res in results:
                on_result(res)
        return results
    results = []
    for name in names:
        res = run_law(name, config.seed, config.scale)
        if on_result:
            on_result(res)
        results.append(res)
    return results
