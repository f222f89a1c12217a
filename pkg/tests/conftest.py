import random

import pytest

from jetcas import Poly, PolyRing, PrimeField


@pytest.fixture
def rng():
    return random.Random(20260814)


@pytest.fixture
def ring3():
    return PolyRing(("x", "y", "z"))


@pytest.fixture
def ring2():
    return PolyRing(("x", "y"))


@pytest.fixture
def gf_ring3():
    return PolyRing(("x", "y", "z"), domain=PrimeField(32003))


def random_poly(
    rng: random.Random,
    ring: PolyRing,
    max_degree: int = 3,
    max_terms: int = 4,
) -> Poly:
    """A random sparse polynomial with small integer coefficients."""
    n = ring.nvars
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(n)] += 1
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
    return ring.poly(terms)


def to_dict(f: Poly) -> dict:
    """Exponent-dict view of a polynomial, the format the oracles accept."""
    return dict(f.terms)
