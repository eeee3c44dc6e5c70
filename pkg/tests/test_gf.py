from itertools import product

import pytest

from projforce.errors import DivisionByZero, LengthMismatch, NotPrimePower, UnsupportedOrder
from projforce.gf import add, dot, field_new, inv, mul, neg, supported_orders

SMALL = [q for q in supported_orders() if q <= 9]


def carryless_mod(a, b, modulus_bits, degree):
    """Independent GF(2^e) product on bit-packed polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> degree & 1:
            a ^= modulus_bits
    return r


def test_prime_field():
    f = field_new(2)
    assert (f.q, f.p, f.e, f.modulus) == (2, 2, 1, ())


def test_gf4_modulus_is_the_only_irreducible_quadratic():
    # exhaustive root test over F_2 for the four monic quadratics
    irreducible = [
        (c0, c1) for c0, c1 in product(range(2), repeat=2)
        if all((x * x + c1 * x + c0) % 2 for x in range(2))
    ]
    assert irreducible == [(1, 1)]
    f = field_new(4)
    assert (f.p, f.e, f.modulus) == (2, 2, (1, 1, 1))


def test_chosen_moduli():
    assert field_new(8).modulus == (1, 1, 0, 1)  # x^3 + x + 1
    assert field_new(9).modulus == (1, 0, 1)  # x^2 + 1


@pytest.mark.parametrize("q", [1, 6, 10, 12, 0])
def test_not_prime_power(q):
    with pytest.raises(NotPrimePower):
        field_new(q)


def test_unsupported_order():
    with pytest.raises(UnsupportedOrder):
        field_new(37)


def test_examples():
    assert add(field_new(2), 1, 1) == 0
    assert mul(field_new(4), 2, 2) == 3
    assert inv(field_new(5), 2) == 3
    assert neg(field_new(7), 3) == 4


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        inv(field_new(4), 0)


def test_dot():
    assert dot(field_new(2), (1, 1), (1, 1)) == 0
    assert dot(field_new(2), (1, 0), (1, 1)) == 1
    assert dot(field_new(3), (1, 2), (2, 2)) == 0
    with pytest.raises(LengthMismatch):
        dot(field_new(2), (1,), (1, 0))


@pytest.mark.parametrize("q,bits", [(4, 0b111), (8, 0b1011), (16, 0b10011), (32, 0b100101)])
def test_binary_extension_matches_carryless(q, bits):
    f = field_new(q)
    e = f.e
    assert sum(c << i for i, c in enumerate(f.modulus)) == bits
    for a in range(q):
        for b in range(q):
            assert f.mul(a, b) == carryless_mod(a, b, bits, e)
            assert f.add(a, b) == a ^ b


@pytest.mark.parametrize("q", SMALL)
def test_field_axioms_exhaustive(q):
    f = field_new(q)
    els = range(q)
    for a in els:
        assert f.add(a, 0) == a and f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", SMALL)
def test_frobenius(q):
    f = field_new(q)
    assert all(f.pow(a, q) == a for a in range(q))


@pytest.mark.parametrize("q", supported_orders())
def test_every_supported_order_is_a_field(q):
    f = field_new(q)
    assert sorted(f.inv(a) for a in range(1, q)) == list(range(1, q))
    # the multiplicative group is cyclic of order q - 1
    assert any(len({f.pow(g, i) for i in range(q - 1)}) == q - 1 for g in range(1, q))


def test_element_check():
    f = field_new(3)
    assert all(f.check(a) == a for a in range(3))
    with pytest.raises(ValueError):
        f.check(3)
