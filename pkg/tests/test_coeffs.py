import random
from fractions import Fraction

import pytest

from jetcas import QQ, InputError, PrimeField
from jetcas.coeffs import is_prime


def test_is_prime_small_and_carmichael():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}
    for n in range(-3, 42):
        assert is_prime(n) == (n in primes)
    # Carmichael numbers fool Fermat tests but not this one.
    for n in (561, 1105, 1729, 41041):
        assert not is_prime(n)
    assert is_prime(32003)
    assert is_prime(2**31 - 1)
    assert not is_prime(2**32 + 1)


def test_rational_ops_match_fraction():
    rng = random.Random(7)
    for _ in range(200):
        a = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        b = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        assert QQ.add(a, b) == a + b
        assert QQ.sub(a, b) == a - b
        assert QQ.mul(a, b) == a * b
        assert QQ.neg(a) == -a
        if b:
            assert QQ.div(a, b) == a / b
        if a:
            assert QQ.inv(a) * a == 1
    assert QQ.characteristic == 0
    assert QQ.modulus is None
    assert QQ.convert(5) == Fraction(5)
    assert QQ.from_literal(6, 4) == Fraction(3, 2)
    assert QQ.is_negative(Fraction(-1, 2))
    assert not QQ.is_negative(Fraction(0))
    with pytest.raises(TypeError):
        QQ.convert(1.5)


def test_prime_field_ops():
    gf = PrimeField(32003)
    p = 32003
    rng = random.Random(11)
    for _ in range(200):
        a = rng.randrange(p)
        b = rng.randrange(p)
        assert gf.add(a, b) == (a + b) % p
        assert gf.sub(a, b) == (a - b) % p
        assert gf.mul(a, b) == a * b % p
        assert gf.neg(a) == (-a) % p
        if a:
            assert gf.mul(a, gf.inv(a)) == 1
        if b:
            assert gf.mul(gf.div(a, b), b) == a
    assert gf.characteristic == p
    assert gf.modulus == p
    assert gf.convert(-1) == p - 1
    assert gf.convert(Fraction(1, 2)) == gf.inv(2)
    assert not gf.is_negative(p - 1)


def test_prime_field_rejects_composite_modulus():
    with pytest.raises(InputError):
        PrimeField(32004)
    with pytest.raises(InputError):
        PrimeField(1)


def test_prime_field_literal_with_bad_denominator():
    gf = PrimeField(7)
    assert gf.from_literal(1, 3) == gf.inv(3)
    with pytest.raises(InputError):
        gf.from_literal(1, 14)
    with pytest.raises(ZeroDivisionError):
        gf.inv(0)
