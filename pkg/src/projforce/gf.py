"""Arithmetic in the finite field F_q for prime powers q <= 32.

Elements are encoded as integers in ``[0, q)``.  For a prime field the
encoding is the residue itself.  For ``q = p^e`` with ``e > 1`` an element
is a polynomial ``c_0 + c_1 x + ... + c_{e-1} x^{e-1}`` reduced modulo a
fixed irreducible polynomial and encoded as ``sum(c_i * p**i)``.  The
modulus is the monic irreducible of degree ``e`` whose lower coefficients
have the smallest such encoding (so ``x^2 + x + 1`` for q = 4,
``x^3 + x + 1`` for q = 8, ``x^2 + 1`` for q = 9).

All tables are built once per order and cached; a FieldSpec is immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence, Tuple

from .errors import DivisionByZero, LengthMismatch, NotPrimePower, UnsupportedOrder

MAX_ORDER = 32


def _smallest_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def prime_power_decomposition(q: int) -> Tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = _smallest_factor(q)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, e


# Polynomials over F_p are coefficient tuples, lowest degree first.

def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list:
    """Remainder of a modulo the monic polynomial m over F_p."""
    a = list(a)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return [c % p for c in a[:dm]] + [0] * max(0, dm - len(a))


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    e = len(m) - 1
    for d in range(1, e // 2 + 1):
        for low in product(range(p), repeat=d):
            divisor = list(low) + [1]
            if not any(_poly_mod(m, divisor, p)):
                return False
    return True


def _decode(a: int, p: int, e: int) -> list:
    digits = []
    for _ in range(e):
        a, r = divmod(a, p)
        digits.append(r)
    return digits


def _encode(coeffs: Sequence[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


def least_irreducible(p: int, e: int) -> Tuple[int, ...]:
    """Monic irreducible of degree e over F_p with the smallest encoding."""
    for enc in range(p**e):
        m = _decode(enc, p, e) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    q: int
    p: int
    e: int
    modulus: Tuple[int, ...] = ()
    add_table: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False, compare=False)
    mul_table: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False, compare=False)
    neg_table: Tuple[int, ...] = field(default=(), repr=False, compare=False)
    inv_table: Tuple[int, ...] = field(default=(), repr=False, compare=False)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self.inv_table[a]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = 1
        while n:
            if n & 1:
                result = self.mul_table[result][a]
            a = self.mul_table[a][a]
            n >>= 1
        return result

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of F_{self.q}")
        return a

    def __str__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field_new(q: int) -> FieldSpec:
    """Build (or fetch the cached) field of order q."""
    p, e = prime_power_decomposition(q)
    if q > MAX_ORDER:
        raise UnsupportedOrder(f"q={q} exceeds the supported maximum {MAX_ORDER}")
    if e == 1:
        modulus: Tuple[int, ...] = ()
        add = tuple(tuple((a + b) % p for b in range(q)) for a in range(q))
        mul = tuple(tuple((a * b) % p for b in range(q)) for a in range(q))
    else:
        modulus = least_irreducible(p, e)
        polys = [_decode(a, p, e) for a in range(q)]
        add = tuple(
            tuple(_encode([(x + y) % p for x, y in zip(polys[a], polys[b])], p) for b in range(q))
            for a in range(q)
        )
        rows = []
        for a in range(q):
            row = []
            for b in range(q):
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(polys[a]):
                    for j, y in enumerate(polys[b]):
                        prod[i + j] += x * y
                row.append(_encode(_poly_mod(prod, modulus, p), p))
            rows.append(tuple(row))
        mul = tuple(rows)
    neg = tuple(add[a].index(0) for a in range(q))
    inv = (0,) + tuple(mul[a].index(1) for a in range(1, q))
    return FieldSpec(q, p, e, modulus, add, mul, neg, inv)


def add(f: FieldSpec, a: int, b: int) -> int:
    return f.add(f.check(a), f.check(b))


def mul(f: FieldSpec, a: int, b: int) -> int:
    return f.mul(f.check(a), f.check(b))


def neg(f: FieldSpec, a: int) -> int:
    return f.neg(f.check(a))


def inv(f: FieldSpec, a: int) -> int:
    return f.inv(f.check(a))


def dot(f: FieldSpec, u: Sequence[int], v: Sequence[int]) -> int:
    """Standard bilinear form sum(u_i * v_i) over F_q."""
    if len(u) != len(v):
        raise LengthMismatch(f"vectors of length {len(u)} and {len(v)}")
    addt, mult = f.add_table, f.mul_table
    s = 0
    for a, b in zip(u, v):
        s = addt[s][mult[a][b]]
    return s


def supported_orders() -> list:
    """All prime powers in the supported range."""
    out = []
    for q in range(2, MAX_ORDER + 1):
        try:
            prime_power_decomposition(q)
        except NotPrimePower:
            continue
        out.append(q)
    return out
