"""Multivariate polynomial rings over QQ or a prime field.

A monomial is a tuple of nonnegative ints, one exponent per ring variable.
A polynomial is a dict from monomial to nonzero coefficient; the zero
polynomial has an empty dict.  Printing is canonical: terms descend in the
ring's monomial order, so equal polynomials print identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .coeffs import QQ, PrimeField
from .errors import InputError
from .orders import GREVLEX

Monomial = tuple[int, ...]

MAX_EXPONENT = 2**31 - 1

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    for x in out:
        if x > MAX_EXPONENT:
            raise OverflowError(f"exponent {x} exceeds the 32-bit limit")
    return out


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b as a monomial, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_divides(b: Monomial, a: Monomial) -> bool:
    for y, x in zip(b, a):
        if y > x:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class PolyRing:
    """An ordered polynomial ring with a coefficient domain.

    ``weights`` is optional metadata assigning an integer weight to each
    variable; it powers weight-homogeneity checks and never affects the
    monomial order unless the order itself is a ``Weighted`` instance.
    """

    vars: tuple[str, ...]
    order: object = GREVLEX
    domain: object = QQ
    weights: tuple[int, ...] | None = None
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.vars, tuple):
            object.__setattr__(self, "vars", tuple(self.vars))
        for v in self.vars:
            if not _NAME_RE.match(v):
                raise InputError(f"bad variable name {v!r}")
        if len(set(self.vars)) != len(self.vars):
            raise InputError("duplicate variable names")
        if self.weights is not None:
            if not isinstance(self.weights, tuple):
                object.__setattr__(self, "weights", tuple(self.weights))
            if len(self.weights) != len(self.vars):
                raise InputError("weights length differs from variable count")
        object.__setattr__(
            self, "_index", {v: i for i, v in enumerate(self.vars)}
        )

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"unknown variable {name!r}") from None

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.domain.convert(c)
        if not c:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "Poly":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.domain.convert(1)})

    def monomial(self, e: Monomial, c=1) -> "Poly":
        c = self.domain.convert(c)
        if not c:
            return Poly(self, {})
        return Poly(self, {tuple(e): c})

    def poly(self, terms: dict) -> "Poly":
        clean = {}
        for e, c in terms.items():
            c = self.domain.convert(c)
            if c:
                clean[tuple(e)] = c
        return Poly(self, clean)


class Poly:
    """Immutable-by-convention sparse polynomial."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.vars, frozenset(self.terms.items())))

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = dom.add(out.get(e, dom.convert(0)), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = dom.sub(out.get(e, dom.convert(0)), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        dom = self.ring.domain
        return Poly(self.ring, {e: dom.neg(c) for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        dom = self.ring.domain
        out: dict = {}
        small, big = self.terms, other.terms
        if len(small) > len(big):
            small, big = big, small
        for e1, c1 in small.items():
            for e2, c2 in big.items():
                e = mono_mul(e1, e2)
                s = dom.add(out.get(e, dom.convert(0)), dom.mul(c1, c2))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c) -> "Poly":
        dom = self.ring.domain
        c = dom.convert(c)
        if not c:
            return self.ring.zero()
        return Poly(
            self.ring, {e: dom.mul(cc, c) for e, cc in self.terms.items()}
        )

    def mul_term(self, e: Monomial, c) -> "Poly":
        dom = self.ring.domain
        c = dom.convert(c)
        if not c:
            return self.ring.zero()
        return Poly(
            self.ring,
            {mono_mul(ee, e): dom.mul(cc, c) for ee, cc in self.terms.items()},
        )

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(mono_deg(e) for e in self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        key = self.ring.order.key
        return sorted(
            self.terms.items(), key=lambda t: key(t[0]), reverse=True
        )

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        key = self.ring.order.key
        return max(self.terms, key=key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        dom = self.ring.domain
        inv = dom.inv(self.leading_coefficient())
        return Poly(
            self.ring, {e: dom.mul(c, inv) for e, c in self.terms.items()}
        )

    def coefficient(self, e: Monomial):
        return self.terms.get(tuple(e), self.ring.domain.convert(0))

    def constant_term(self):
        return self.coefficient((0,) * self.ring.nvars)

    def is_constant(self) -> bool:
        return all(mono_deg(e) == 0 for e in self.terms)

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(self.ring.vars[i])
        return used

    def weight_of(self) -> int | None:
        """Common weight of all terms, or None if they disagree.

        Requires the ring to carry a weight vector.  The zero polynomial is
        homogeneous of weight 0 by convention.
        """
        w = self.ring.weights
        if w is None:
            raise ValueError("ring has no weight vector")
        seen = None
        for e in self.terms:
            wt = sum(wi * ei for wi, ei in zip(w, e))
            if seen is None:
                seen = wt
            elif seen != wt:
                return None
        return 0 if seen is None else seen

    def diff(self, name: str) -> "Poly":
        i = self.ring.index(name)
        dom = self.ring.domain
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            ee = e[:i] + (k - 1,) + e[i + 1 :]
            s = dom.add(
                out.get(ee, dom.convert(0)), dom.mul(c, dom.convert(k))
            )
            if s:
                out[ee] = s
            else:
                out.pop(ee, None)
        return Poly(self.ring, out)

    def substitute(self, images: dict) -> "Poly":
        """Ring map determined by variable images.

        Every image must live in one common target ring over the same
        coefficient domain; variables of this ring that actually occur must
        all have images.
        """
        target = None
        for img in images.values():
            if target is None:
                target = img.ring
            elif img.ring != target:
                raise ValueError("substitution images live in different rings")
        if target is None:
            raise ValueError("empty substitution")
        if target.domain != self.ring.domain:
            raise ValueError("substitution changes the coefficient domain")
        for v in self.variables():
            if v not in images:
                raise ValueError(f"no image given for variable {v!r}")
        out = target.zero()
        power_cache: dict[tuple[str, int], Poly] = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                name = self.ring.vars[i]
                p = power_cache.get((name, k))
                if p is None:
                    p = images[name] ** k
                    power_cache[(name, k)] = p
                term = term * p
            out = out + term
        return out

    def evaluate(self, point: dict):
        """Full evaluation at a point given as {name: domain element}."""
        dom = self.ring.domain
        total = dom.convert(0)
        for e, c in self.terms.items():
            val = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                name = self.ring.vars[i]
                if name not in point:
                    raise ValueError(f"no value given for variable {name!r}")
                base = dom.convert(point[name])
                if isinstance(dom, PrimeField):
                    val = dom.mul(val, pow(base, k, dom.p))
                else:
                    val = dom.mul(val, base**k)
            total = dom.add(total, val)
        return total

    def _mono_str(self, e: Monomial) -> str:
        parts = []
        for i, k in enumerate(e):
            if k == 0:
                continue
            if k == 1:
                parts.append(self.ring.vars[i])
            else:
                parts.append(f"{self.ring.vars[i]}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        dom = self.ring.domain
        chunks = []
        for e, c in self.sorted_terms():
            neg = dom.is_negative(c)
            mag = dom.neg(c) if neg else c
            mono = self._mono_str(e)
            if not mono:
                body = dom.to_str(mag)
            elif mag == dom.convert(1):
                body = mono
            else:
                body = f"{dom.to_str(mag)}*{mono}"
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Poly({self})"


def fresh_name(existing, base: str = "t") -> str:
    """A variable name not present in ``existing``, built from ``base``."""
    if base not in existing:
        return base
    i = 0
    while f"{base}{i}" in existing:
        i += 1
    return f"{base}{i}"


def content_normalize(f: Poly) -> Poly:
    """Scale to integer coefficients with content 1 and positive lead (QQ),
    or to a monic polynomial (prime fields).  Zero passes through."""
    if not f.terms:
        return f
    dom = f.ring.domain
    if isinstance(dom, PrimeField):
        return f.monic()
    from math import gcd

    nums = [c.numerator for c in f.terms.values()]
    dens = [c.denominator for c in f.terms.values()]
    g = 0
    for n in nums:
        g = gcd(g, n)
    l = 1
    for d in dens:
        l = l * d // gcd(l, d)
    scale = Fraction(l, g)
    if dom.is_negative(f.terms[f.leading_monomial()]):
        scale = -scale
    return f.scale(scale)
