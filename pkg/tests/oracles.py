"""Independent oracles the main engine is tested against.

Nothing here calls the basis engine: membership goes through exact sparse
linear algebra on a degree-bounded multiplication matrix, and the monomial
oracles are direct combinatorial definitions.  Polynomials are passed in
as {exponent tuple: Fraction} dicts.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction


def key_of(e):
    """Degree-first order on exponent tuples, matching none of the engine's
    internals on purpose: any fixed total order works for elimination."""
    return (sum(e), tuple(-x for x in reversed(e)))


def monomials_up_to(nvars: int, degree: int):
    """All exponent tuples of total degree at most ``degree``."""
    out = []
    for total in range(degree + 1):
        for cuts in itertools.combinations(
            range(total + nvars - 1), nvars - 1
        ):
            prev = -1
            parts = []
            for c in cuts:
                parts.append(c - prev - 1)
                prev = c
            parts.append(total + nvars - 2 - prev)
            out.append(tuple(parts))
    return out


def _mul_mono(e, m):
    return tuple(a + b for a, b in zip(e, m))


class MacaulayOracle:
    """Degree-bounded membership via row reduction.

    The row space spans every combination sum(h_i * g_i) in which each
    product stays within the degree cap.  That space only ever
    underestimates the ideal, so a positive answer is always sound; a
    member is certified once the cap exceeds the degree of one of its
    representations.
    """

    def __init__(self, nvars: int, gens: list[dict], cap: int):
        self.nvars = nvars
        self.cap = cap
        self.pivots: dict = {}
        for g in gens:
            if not g:
                continue
            gdeg = max(sum(e) for e in g)
            for m in monomials_up_to(nvars, cap - gdeg):
                row = {_mul_mono(e, m): Fraction(c) for e, c in g.items()}
                self._insert(row)

    def _reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = max(row, key=key_of)
            pivot = self.pivots.get(lead)
            if pivot is None:
                return row
            c = row[lead]
            for e, pc in pivot.items():
                s = row.get(e, Fraction(0)) - c * pc
                if s:
                    row[e] = s
                else:
                    row.pop(e, None)
        return row

    def _insert(self, row: dict):
        row = self._reduce(row)
        if not row:
            return
        lead = max(row, key=key_of)
        inv = 1 / row[lead]
        self.pivots[lead] = {e: c * inv for e, c in row.items()}

    def is_member(self, f: dict) -> bool:
        if not f:
            return True
        if max(sum(e) for e in f) > self.cap:
            raise ValueError("test polynomial exceeds the oracle cap")
        return not self._reduce({e: Fraction(c) for e, c in f.items()})


def macaulay_member(nvars: int, gens: list[dict], f: dict, cap: int) -> bool:
    return MacaulayOracle(nvars, gens, cap).is_member(f)


def monomial_dim_bruteforce(nvars: int, supports) -> int:
    """Largest coordinate subspace avoiding every generator support, by
    direct enumeration over all variable subsets."""
    supports = [frozenset(s) for s in supports]
    if any(not s for s in supports):
        return -1
    best = -1
    for r in range(nvars, -1, -1):
        for subset in itertools.combinations(range(nvars), r):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                best = r
                break
        if best >= 0:
            break
    return best


def monomial_quotient(gens: list[tuple], f: tuple) -> set:
    """(I : f) for a monomial ideal and a monomial, by the g/gcd(g, f)
    closed form, returned as a minimal generator set."""
    quots = []
    for g in gens:
        quots.append(tuple(max(a - b, 0) for a, b in zip(g, f)))
    return minimal_monomials(quots)


def monomial_saturate(gens: list[tuple], f: tuple) -> set:
    """(I : f^infinity): zero out the exponents along the support of f."""
    support = [i for i, x in enumerate(f) if x]
    out = []
    for g in gens:
        out.append(
            tuple(0 if i in support else x for i, x in enumerate(g))
        )
    return minimal_monomials(out)


def monomial_intersect(a: list[tuple], b: list[tuple]) -> set:
    """Pairwise least common multiples generate the intersection."""
    out = []
    for g in a:
        for h in b:
            out.append(tuple(max(x, y) for x, y in zip(g, h)))
    return minimal_monomials(out)


def minimal_monomials(mons) -> set:
    """Drop every monomial divisible by another one in the collection."""
    mons = set(mons)
    out = set()
    for m in mons:
        if not any(
            other != m and all(o <= x for o, x in zip(other, m))
            for other in mons
        ):
            out.add(m)
    return out


def random_terms(
    rng: random.Random, nvars: int, max_degree: int, max_terms: int = 4
) -> dict:
    """A random sparse integer polynomial as an exponent-dict."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        e = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            e[rng.randrange(nvars)] += 1
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        e = tuple(e)
        terms[e] = terms.get(e, 0) + c
    return {e: c for e, c in terms.items() if c}
