from fractions import Fraction

import pytest

from jetcas import (
    GREVLEX,
    LEX,
    Block,
    InputError,
    Poly,
    PolyRing,
    PrimeField,
    Weighted,
    parse_poly,
)
from jetcas.ring import MAX_EXPONENT, content_normalize, fresh_name

from conftest import random_poly


def test_ring_validation():
    with pytest.raises(InputError):
        PolyRing(("2x",))
    with pytest.raises(InputError):
        PolyRing(("a-b",))
    with pytest.raises(InputError):
        PolyRing(("x", "x"))
    with pytest.raises(InputError):
        PolyRing(("x", "y"), weights=(1,))
    r = PolyRing(["x", "y"])
    assert r.vars == ("x", "y")
    assert r.nvars == 2
    with pytest.raises(InputError):
        r.index("w")


def test_constructors_drop_zero(ring2):
    assert not ring2.const(0)
    assert not ring2.monomial((1, 1), 0)
    assert ring2.poly({(1, 0): 2, (0, 1): 0}) == ring2.var("x").scale(2)
    assert ring2.one().constant_term() == 1
    assert ring2.zero().degree() == -1
    assert ring2.one().degree() == 0


def test_arithmetic_identities(rng, ring3):
    zero = ring3.zero()
    for _ in range(40):
        f = random_poly(rng, ring3)
        g = random_poly(rng, ring3)
        h = random_poly(rng, ring3)
        assert f + g == g + f
        assert f * g == g * f
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)
        assert f - f == zero
        assert f + (-f) == zero
        assert f * zero == zero
        assert f * ring3.one() == f
        assert f ** 3 == f * f * f
    assert ring3.zero() ** 0 == ring3.one()
    with pytest.raises(ValueError):
        random_poly(rng, ring3) ** (-1)


def test_cross_ring_operations_rejected(ring2, ring3):
    with pytest.raises(ValueError):
        ring2.var("x") + ring3.var("x")
    with pytest.raises(ValueError):
        ring2.var("x") * ring3.var("x")


def test_grevlex_leading_monomials(ring3):
    x, y, z = (ring3.var(v) for v in "xyz")
    # Same degree: the smaller power of the last variable wins.
    f = x * y ** 2 * z + x ** 2 * z ** 2
    assert f.leading_monomial() == (1, 2, 1)
    # Higher total degree always wins.
    g = x ** 3 + y ** 2
    assert g.leading_monomial() == (3, 0, 0)
    h = x ** 2 * y + x * y ** 2
    assert h.leading_monomial() == (2, 1, 0)


def test_lex_and_weighted_and_block_orders():
    lexring = PolyRing(("x", "y"), order=LEX)
    x, y = lexring.var("x"), lexring.var("y")
    assert (x + y ** 10).leading_monomial() == (1, 0)

    wring = PolyRing(("x", "y"), order=Weighted((1, 2)))
    wx, wy = wring.var("x"), wring.var("y")
    # Equal weight 2; the tie breaks by total degree.
    assert (wx ** 2 + wy).leading_monomial() == (2, 0)
    assert (wx + wy).leading_monomial() == (0, 1)

    bring = PolyRing(("t", "x", "y"), order=Block(1))
    t, bx, by = (bring.var(v) for v in ("t", "x", "y"))
    # Any monomial containing t beats any t-free monomial.
    assert (t + bx ** 5 * by ** 5).leading_monomial() == (1, 0, 0)
    assert (t * by + t * bx).leading_monomial() == (1, 1, 0)
    assert (bx ** 2 + bx * by).leading_monomial() == (0, 2, 0)


def test_string_form_is_canonical(ring2):
    x, y = ring2.var("x"), ring2.var("y")
    f = x ** 2 - y.scale(2) + ring2.const(Fraction(1, 2))
    assert str(f) == "x^2 - 2*y + 1/2"
    assert str(ring2.zero()) == "0"
    assert str(-x) == "-x"
    assert str(x * y) == "x*y"
    gf = PolyRing(("x",), domain=PrimeField(7))
    assert str(gf.var("x").scale(-1)) == "6*x"


def test_str_parse_round_trip(rng, ring3):
    for _ in range(60):
        f = random_poly(rng, ring3, max_degree=4, max_terms=5)
        assert parse_poly(ring3, str(f)) == f
    f = ring3.var("x").scale(Fraction(3, 7)) - ring3.const(Fraction(1, 6))
    assert parse_poly(ring3, str(f)) == f


def test_substitution_is_a_ring_map(rng, ring2, ring3):
    images = {
        "x": ring3.var("x") + ring3.var("z") ** 2,
        "y": ring3.var("y").scale(-3),
    }
    for _ in range(20):
        f = random_poly(rng, ring2)
        g = random_poly(rng, ring2)
        fs, gs = f.substitute(images), g.substitute(images)
        assert (f + g).substitute(images) == fs + gs
        assert (f * g).substitute(images) == fs * gs
    assert ring2.const(5).substitute(images) == ring3.const(5)


def test_substitution_errors(ring2, ring3, gf_ring3):
    x = ring2.var("x")
    with pytest.raises(ValueError):
        (x + ring2.var("y")).substitute({"x": ring3.var("x")})
    with pytest.raises(ValueError):
        x.substitute({})
    with pytest.raises(ValueError):
        x.substitute({"x": ring3.var("x"), "y": gf_ring3.var("y")})
    with pytest.raises(ValueError):
        x.substitute({"x": gf_ring3.var("x")})


def test_evaluate_matches_direct_arithmetic(rng, ring3):
    for _ in range(20):
        f = random_poly(rng, ring3)
        pt = {v: rng.randint(-4, 4) for v in ring3.vars}
        expect = sum(
            c * Fraction(pt["x"]) ** e[0]
            * Fraction(pt["y"]) ** e[1]
            * Fraction(pt["z"]) ** e[2]
            for e, c in f.terms.items()
        )
        assert f.evaluate(pt) == expect
    with pytest.raises(ValueError):
        ring3.var("x").evaluate({"y": 1, "z": 2})


def test_evaluate_prime_field(gf_ring3):
    f = gf_ring3.var("x") ** 3 + gf_ring3.var("y").scale(5)
    assert f.evaluate({"x": 2, "y": 1, "z": 0}) == 13
    assert f.evaluate({"x": -1, "y": 0, "z": 0}) == 32002


def test_diff_product_rule(rng, ring3):
    for _ in range(25):
        f = random_poly(rng, ring3)
        g = random_poly(rng, ring3)
        for v in ring3.vars:
            lhs = (f * g).diff(v)
            rhs = f.diff(v) * g + f * g.diff(v)
            assert lhs == rhs
    assert ring3.const(7).diff("x") == ring3.zero()
    assert (ring3.var("x") ** 4).diff("x") == ring3.monomial((3, 0, 0), 4)


def test_weight_of():
    r = PolyRing(("x", "y"), weights=(1, 2))
    x, y = r.var("x"), r.var("y")
    assert (x ** 2 + y).weight_of() == 2
    assert (x ** 2 + x).weight_of() is None
    assert r.zero().weight_of() == 0
    assert r.const(3).weight_of() == 0
    plain = PolyRing(("x",))
    with pytest.raises(ValueError):
        plain.var("x").weight_of()


def test_exponent_overflow():
    r = PolyRing(("x",))
    f = r.monomial((MAX_EXPONENT,))
    with pytest.raises(OverflowError):
        f * r.var("x")


def test_monic_and_content_normalize(rng, ring3):
    for _ in range(25):
        f = random_poly(rng, ring3).scale(Fraction(6, 35))
        if not f:
            continue
        g = content_normalize(f)
        coeffs = list(g.terms.values())
        assert all(c.denominator == 1 for c in coeffs)
        nums = [c.numerator for c in coeffs]
        from math import gcd

        acc = 0
        for n in nums:
            acc = gcd(acc, n)
        assert acc == 1
        assert g.leading_coefficient() > 0
        # Same polynomial up to the scalar relating the two leads.
        ratio = g.leading_coefficient() / f.leading_coefficient()
        assert f.scale(ratio) == g
    assert content_normalize(ring3.zero()) == ring3.zero()

    gfr = PolyRing(("x", "y"), domain=PrimeField(13))
    h = gfr.var("x").scale(5) + gfr.one()
    assert content_normalize(h) == h.monic()
    assert h.monic().leading_coefficient() == 1


def test_misc_accessors(ring2):
    x, y = ring2.var("x"), ring2.var("y")
    f = x ** 2 * y - y.scale(3) + ring2.const(4)
    assert f.coefficient((2, 1)) == 1
    assert f.coefficient((0, 1)) == -3
    assert f.constant_term() == 4
    assert not f.is_constant()
    assert ring2.const(9).is_constant()
    assert f.variables() == {"x", "y"}
    assert (x ** 2).variables() == {"x"}
    assert f.mul_term((1, 0), 2) == f * x.scale(2)
    terms = f.sorted_terms()
    keys = [ring2.order.key(e) for e, _ in terms]
    assert keys == sorted(keys, reverse=True)
    with pytest.raises(ValueError):
        ring2.zero().leading_monomial()
    assert hash(f) == hash(x ** 2 * y - y.scale(3) + ring2.const(4))


def test_fresh_name():
    assert fresh_name({"x", "y"}) == "t"
    assert fresh_name({"t"}) == "t0"
    assert fresh_name({"t", "t0", "t1"}) == "t2"
    assert fresh_name(set(), base="s") == "s"


def test_poly_repr_and_equality(ring2):
    x = ring2.var("x")
    assert repr(x) == "Poly(x)"
    assert x != "x"
    assert (x == 3) is False
    assert isinstance(x, Poly)
    assert ring2.order is GREVLEX
