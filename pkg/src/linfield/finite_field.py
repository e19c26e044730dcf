"""Exact arithmetic in a two-level tower GF(p) < GF(q) < GF(q^n).

Elements are plain ``int`` codes.  A GF(q) element with coefficients
``d_0 + d_1 u + ... + d_{e-1} u^{e-1}`` (``u`` a root of ``f``) has code
``sum(d_i * p**i)``; a GF(q^n) element ``c_0 + c_1 v + ... + c_{n-1} v^{n-1}``
(``v`` a root of ``g``) has code ``sum(c_j * q**j)`` where ``c_j`` are GF(q)
codes.  So GF(q) sits inside GF(q^n) as the codes below ``q``, and integer
order on codes is lexicographic order on the reversed coefficient sequence.

Towers up to ``bound`` elements get exp/log (and, for odd ``p``, Zech)
tables.  Larger towers fall back to schoolbook arithmetic with Frobenius
applied through the precomputed matrix over GF(q).
"""

from __future__ import annotations

import random
from typing import Iterator, Sequence

import numpy as np

from linfield.errors import (
    DegreeZero,
    DivisionByZero,
    FieldTooLarge,
    NotADivisor,
    NotPrime,
    ReduciblePolynomial,
    TowerMismatch,
)

DEFAULT_BOUND = 1 << 16

Elem = int


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    k = 2
    while k * k <= m:
        if m % k == 0:
            out.append(k)
            while m % k == 0:
                m //= k
        k += 1
    if m > 1:
        out.append(m)
    return out


def _digits(a: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        a, r = divmod(a, base)
        out.append(r)
    return out


def _undigits(ds: Sequence[int], base: int) -> int:
    a = 0
    for d in reversed(ds):
        a = a * base + d
    return a


class _Layer:
    """Field of order ``p**dim`` on integer codes, given a slow multiply.

    Addition is digit-wise mod ``p``.  When the order is within ``bound`` the
    multiplicative structure is tabulated against a primitive element.
    """

    def __init__(self, p: int, dim: int, slow_mul, bound: int) -> None:
        self.p = p
        self.dim = dim
        self.order = p**dim
        self._slow_mul = slow_mul
        self.tabled = self.order <= bound
        self.primitive: int | None = None
        if self.tabled:
            self._build_tables()

    # -- construction -------------------------------------------------

    def _slow_pow(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            k >>= 1
        return r

    def _find_primitive(self) -> int:
        m = self.order - 1
        if m == 1:
            return 1
        factors = _prime_factors(m)
        for c in range(2, self.order):
            if all(self._slow_pow(c, m // r) != 1 for r in factors):
                return c
        raise ArithmeticError("no primitive element; defining polynomial is reducible")

    def _build_tables(self) -> None:
        p, dim, order = self.p, self.dim, self.order
        c = self._find_primitive()
        self.primitive = c
        place = np.array([p**k for k in range(dim)], dtype=np.int64)
        mat = np.array(
            [_digits(self._slow_mul(c, p**k), p, dim) for k in range(dim)], dtype=np.int64
        ).T
        m = order - 1
        powers = np.zeros((m, dim), dtype=np.int64)
        vec = np.zeros(dim, dtype=np.int64)
        vec[0] = 1
        for k in range(m):
            powers[k] = vec
            vec = (mat @ vec) % p
        codes = (powers @ place).tolist()
        exp = codes + codes
        log = [-1] * order
        for k, a in enumerate(codes):
            log[a] = k
        if -1 in log[1:]:
            raise ArithmeticError("multiplication table is not a cyclic group")
        self._exp = exp
        self._log = log
        self._m = m
        if p != 2:
            plus_one = powers.copy()
            plus_one[:, 0] = (plus_one[:, 0] + 1) % p
            self._zech = [log[a] for a in (plus_one @ place).tolist()]
            self._half = m // 2

    # -- arithmetic ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self.tabled:
            la = self._log[a]
            z = self._zech[(self._log[b] - la) % self._m]
            if z < 0:
                return 0
            return self._exp[la + z]
        p, dim = self.p, self.dim
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, dim), _digits(b, p, dim))], p)

    def neg(self, a: int) -> int:
        if self.p == 2 or not a:
            return a
        if self.tabled:
            return self._exp[self._log[a] + self._half]
        p = self.p
        return _undigits([(-x) % p for x in _digits(a, p, self.dim)], p)

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.tabled:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: int) -> int:
        if not a:
            raise DivisionByZero("zero has no multiplicative inverse")
        if self.tabled:
            return self._exp[self._m - self._log[a]]
        return self._slow_pow(a, self.order - 2)

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if not a:
            if k < 0:
                raise DivisionByZero("zero has no multiplicative inverse")
            return 0
        if self.tabled:
            return self._exp[(self._log[a] * k) % self._m]
        if k < 0:
            a, k = self.inv(a), -k
        return self._slow_pow(a, k % (self.order - 1) or (self.order - 1))


def _poly_rem(num: list[int], den: Sequence[int], layer: _Layer) -> list[int]:
    """Remainder of ``num`` by ``den`` (coefficient lists, low degree first)."""
    r = list(num)
    dd = len(den) - 1
    lead_inv = layer.inv(den[-1])
    for k in range(len(r) - 1, dd - 1, -1):
        c = r[k]
        if not c:
            continue
        c = layer.mul(c, lead_inv)
        for j in range(dd + 1):
            r[k - dd + j] = layer.sub(r[k - dd + j], layer.mul(c, den[j]))
    return r[:dd]


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], layer: _Layer) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                prod[i + j] = layer.add(prod[i + j], layer.mul(x, y))
    return _poly_rem(prod, mod, layer)


def _is_irreducible(poly: Sequence[int], layer: _Layer, bound: int) -> bool:
    """Exhaustive irreducibility test for a monic polynomial over ``layer``."""
    d = len(poly) - 1
    if d <= 1:
        return True
    field = range(layer.order)
    if d <= 3:
        for x in field:
            acc = 0
            for c in reversed(poly):
                acc = layer.add(layer.mul(acc, x), c)
            if not acc:
                return False
        return True
    work = sum(layer.order**k for k in range(1, d // 2 + 1))
    if work > bound:
        raise FieldTooLarge(f"exhaustive irreducibility search needs {work} trial divisors")
    for k in range(1, d // 2 + 1):
        for idx in range(layer.order**k):
            den = _digits(idx, layer.order, k) + [1]
            if not any(_poly_rem(list(poly), den, layer)):
                return False
    return True


def _monic(poly: Sequence[int], level: str) -> tuple[int, ...]:
    poly = list(poly)
    while poly and poly[-1] == 0:
        poly.pop()
    if len(poly) < 2:
        raise DegreeZero(f"defining polynomial of level {level!r} has degree < 1")
    if poly[-1] != 1:
        raise ValueError(f"defining polynomial of level {level!r} must be monic")
    return tuple(poly)


class FieldTower:
    """GF(p) < GF(q = p^e) < GF(q^n), built from monic irreducibles ``f`` and ``g``.

    ``f`` is a coefficient list over GF(p); ``g`` is a coefficient list of
    GF(q) codes (use :meth:`from_nested` style inputs through
    :func:`make_tower`).  Instances are immutable and compare by ``(p, f, g)``.
    """

    def __init__(
        self, p: int, f: Sequence[int], g: Sequence[int], bound: int = DEFAULT_BOUND, tables: bool = True
    ) -> None:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        f = _monic([c % p for c in f], "f")
        self.p = p
        self.f = f
        self.e = len(f) - 1
        self.q = p**self.e
        self.bound = bound

        self._prime = _Layer(p, 1, lambda a, b: a * b % p, bound=max(bound, p))
        if not _is_irreducible(f, self._prime, bound):
            raise ReduciblePolynomial("f")
        if self.q > bound:
            raise FieldTooLarge(f"GF({self.q}) exceeds the table bound {bound}")
        self.base = _Layer(p, self.e, lambda a, b: self._base_slow_mul(a, b), bound=self.q)

        if any(not 0 <= c < self.q for c in g):
            raise TowerMismatch("coefficients of g must be GF(q) codes")
        g = _monic(g, "g")
        self.g = g
        self.n = len(g) - 1
        self.order = self.q**self.n
        if not _is_irreducible(g, self.base, bound):
            raise ReduciblePolynomial("g")
        # tables=False forces schoolbook arithmetic on the top level (used to cross-check the tables)
        self._top = _Layer(p, self.e * self.n, self._slow_mul, bound if tables else 0)
        self.gen = self.q if self.n > 1 else self.base.neg(g[0])
        self.frobenius_table = self._build_frobenius_table()
        self._frob_mats: list[tuple[tuple[int, ...], ...]] | None = None
        if self._top.tabled:
            m = self.order - 1
            self._qpow = [pow(self.q, i, m) if m > 1 else 1 for i in range(self.n)]

    # -- construction helpers ------------------------------------------

    def _base_slow_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        r = _poly_mulmod(_digits(a, p, e), _digits(b, p, e), self.f, self._prime)
        return _undigits(r, p)

    def _slow_mul(self, a: int, b: int) -> int:
        q, n = self.q, self.n
        r = _poly_mulmod(_digits(a, q, n), _digits(b, q, n), self.g, self.base)
        return _undigits(r, q)

    def _build_frobenius_table(self) -> tuple[tuple[int, ...], ...]:
        # column j holds the coordinates of (v^j)^q
        cols = [self.coords(self._top.pow(self._top.pow(self.gen, j), self.q)) for j in range(self.n)]
        return tuple(tuple(cols[j][r] for j in range(self.n)) for r in range(self.n))

    # -- identity ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FieldTower):
            return NotImplemented
        return (self.p, self.f, self.g) == (other.p, other.f, other.g)

    def __hash__(self) -> int:
        return hash((self.p, self.f, self.g))

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, e={self.e}, n={self.n}, q={self.q})"

    # -- element conversion --------------------------------------------

    def check(self, a: Elem) -> Elem:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise TowerMismatch(f"{a!r} is not an element of GF({self.q}^{self.n})")
        return a

    def coords(self, a: Elem) -> tuple[int, ...]:
        """GF(q) coordinates of ``a`` in the monomial basis ``1, v, ..., v^{n-1}``."""
        return tuple(_digits(a, self.q, self.n))

    def from_coords(self, cs: Sequence[int]) -> Elem:
        return _undigits(list(cs), self.q)

    def nested(self, a: Elem) -> tuple[tuple[int, ...], ...]:
        """Little-endian nested digit form: n GF(q) entries, each e GF(p) digits."""
        return tuple(tuple(_digits(c, self.p, self.e)) for c in self.coords(a))

    def from_nested(self, rows: Sequence[Sequence[int]]) -> Elem:
        if len(rows) > self.n:
            raise TowerMismatch(f"element has {len(rows)} coefficients, tower degree is {self.n}")
        cs = []
        for row in rows:
            if len(row) > self.e or any(not 0 <= d < self.p for d in row):
                raise TowerMismatch(f"{list(row)!r} is not a GF({self.q}) element")
            cs.append(_undigits(list(row), self.p))
        return self.from_coords(cs)

    def in_base_field(self, a: Elem) -> bool:
        return a < self.q

    # -- arithmetic ----------------------------------------------------

    zero = 0
    one = 1

    def add(self, a: Elem, b: Elem) -> Elem:
        return self._top.add(a, b)

    def sub(self, a: Elem, b: Elem) -> Elem:
        return self._top.sub(a, b)

    def neg(self, a: Elem) -> Elem:
        return self._top.neg(a)

    def mul(self, a: Elem, b: Elem) -> Elem:
        return self._top.mul(a, b)

    def inv(self, a: Elem) -> Elem:
        return self._top.inv(a)

    def div(self, a: Elem, b: Elem) -> Elem:
        return self._top.mul(a, self._top.inv(b))

    def pow(self, a: Elem, k: int) -> Elem:
        return self._top.pow(a, k)

    def sum(self, xs) -> Elem:
        add = self._top.add
        acc = 0
        for x in xs:
            acc = add(acc, x)
        return acc

    def frobenius(self, a: Elem, i: int = 1) -> Elem:
        """``a ** (q ** i)`` with ``i`` taken mod n."""
        i %= self.n
        if not i or not a:
            return a
        if self._top.tabled:
            top = self._top
            return top._exp[(top._log[a] * self._qpow[i]) % top._m]
        mat = self._frobenius_powers()[i]
        cs = self.coords(a)
        base = self.base
        out = []
        for row in mat:
            acc = 0
            for t, c in zip(row, cs):
                if t and c:
                    acc = base.add(acc, base.mul(t, c))
            out.append(acc)
        return self.from_coords(out)

    def _frobenius_powers(self):
        if self._frob_mats is None:
            n, base = self.n, self.base
            ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
            mats = [ident]
            for _ in range(1, n):
                prev = mats[-1]
                mats.append(
                    tuple(
                        tuple(
                            _dot(self.frobenius_table[r], [prev[k][c] for k in range(n)], base)
                            for c in range(n)
                        )
                        for r in range(n)
                    )
                )
            self._frob_mats = mats
        return self._frob_mats

    def trace(self, a: Elem) -> Elem:
        t = self.sum(self.frobenius(a, i) for i in range(self.n))
        assert t < self.q, "trace left GF(q)"
        return t

    def rel_trace(self, a: Elem, m: int) -> Elem:
        """Trace from GF(q^n) down to GF(q^m); ``m`` must divide n."""
        if m <= 0 or self.n % m:
            raise NotADivisor(f"{m} does not divide {self.n}")
        return self.sum(self.frobenius(a, j * m) for j in range(self.n // m))

    def norm(self, a: Elem) -> Elem:
        r = 1
        for i in range(self.n):
            r = self.mul(r, self.frobenius(a, i))
        return r

    # -- enumeration ---------------------------------------------------

    @property
    def enumerable(self) -> bool:
        return self.order <= self.bound

    def elements(self) -> range:
        """All elements in increasing code order."""
        if not self.enumerable:
            raise FieldTooLarge(f"GF({self.q}^{self.n}) has {self.order} elements, bound is {self.bound}")
        return range(self.order)

    def base_elements(self) -> range:
        return range(self.q)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> Elem:
        return rng.randrange(1 if nonzero else 0, self.order)

    def primitive_element(self) -> Elem:
        if self._top.primitive is None:
            raise FieldTooLarge("no tables for this tower")
        return self._top.primitive


def _dot(xs, ys, layer) -> int:
    acc = 0
    for x, y in zip(xs, ys):
        if x and y:
            acc = layer.add(acc, layer.mul(x, y))
    return acc


def make_tower(p: int, f: Sequence[int], g: Sequence, bound: int = DEFAULT_BOUND) -> FieldTower:
    """Build a validated tower.

    ``g`` entries may be GF(q) codes or little-endian GF(p) digit lists.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    g_codes = []
    for c in g:
        if isinstance(c, int):
            g_codes.append(c)
        else:
            g_codes.append(_undigits([d % p for d in c], p))
    return FieldTower(p, f, g_codes, bound=bound)


def arith(tower: FieldTower, kind: str, a: Elem, b: Elem | None = None) -> Elem:
    tower.check(a)
    if kind in ("inv", "neg"):
        return tower.inv(a) if kind == "inv" else tower.neg(a)
    tower.check(b)
    ops = {"add": tower.add, "sub": tower.sub, "mul": tower.mul, "div": tower.div}
    if kind not in ops:
        raise ValueError(f"unknown operation {kind!r}")
    return ops[kind](a, b)


def frobenius(tower: FieldTower, a: Elem, i: int = 1) -> Elem:
    return tower.frobenius(tower.check(a), i)


def trace(tower: FieldTower, a: Elem) -> Elem:
    return tower.trace(tower.check(a))


def rel_trace(tower: FieldTower, a: Elem, m: int) -> Elem:
    return tower.rel_trace(tower.check(a), m)


def norm(tower: FieldTower, a: Elem) -> Elem:
    return tower.norm(tower.check(a))


def enumerate_field(tower: FieldTower) -> Iterator[Elem]:
    return iter(tower.elements())


# Small towers used throughout the tests, the selftest and the scripts.
def gf4() -> FieldTower:
    """GF(4) over GF(2), ``w^2 = w + 1``."""
    return make_tower(2, [1, 1], [1, 1, 1])


def gf8() -> FieldTower:
    return make_tower(2, [1, 1], [1, 1, 0, 1])


def gf9() -> FieldTower:
    """GF(9) over GF(3) via ``v^2 + 1``."""
    return make_tower(3, [0, 1], [1, 0, 1])


def gf16_over_gf4() -> FieldTower:
    """GF(16) as a quadratic extension of GF(4) via ``v^2 + v + w``."""
    return make_tower(2, [1, 1, 1], [2, 1, 1])


def binary_tower(n: int) -> FieldTower:
    """GF(2^n) over GF(2) with a fixed irreducible of degree n (n <= 8)."""
    polys = {
        1: [0, 1],
        2: [1, 1, 1],
        3: [1, 1, 0, 1],
        4: [1, 1, 0, 0, 1],
        5: [1, 0, 1, 0, 0, 1],
        6: [1, 1, 0, 0, 0, 0, 1],
        7: [1, 1, 0, 0, 0, 0, 0, 1],
        8: [1, 0, 1, 1, 1, 0, 0, 0, 1],
    }
    return make_tower(2, [0, 1], polys[n])


def ternary_tower(n: int) -> FieldTower:
    """GF(3^n) over GF(3) (n <= 4)."""
    polys = {1: [0, 1], 2: [1, 0, 1], 3: [1, 2, 0, 1], 4: [2, 0, 0, 1, 1]}
    return make_tower(3, [0, 1], polys[n])
