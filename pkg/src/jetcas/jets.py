"""Jet spaces of affine varieties as explicit graded ideals.

An order-m arc through a point assigns to each coordinate x a truncated
power series x_0 + x_1 t + ... + x_m t^m.  Substituting these series into a
defining equation f and discarding powers of t beyond t^m produces m+1
coefficient polynomials F(0), ..., F(m); together, over all defining
equations, they cut out the space of order-m arcs on the variety.  Grading
the variable x_j with weight j makes F(e) homogeneous of weight e, which is
the algebraic shadow of the arc-rescaling action t -> s*t.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .errors import InputError, PreconditionError
from .groebner import Budget, Ideal, krull_dim
from .orders import GREVLEX
from .ring import Poly, PolyRing, fresh_name


def jet_var(name: str, j: int) -> str:
    """Name of the order-j coefficient variable attached to a coordinate."""
    return f"{name}_{j}"


@dataclass(frozen=True)
class JetContext:
    """A base ring and a jet order, with the derived graded coefficient ring.

    Jet variables are grouped by level: all order-0 coefficients first, then
    all order-1 ones, and so on, each carrying its level as weight.
    """

    base: PolyRing
    m: int
    ring: PolyRing = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.m < 0:
            raise InputError("jet order must be nonnegative")
        names: list[str] = []
        weights: list[int] = []
        for j in range(self.m + 1):
            for v in self.base.vars:
                names.append(jet_var(v, j))
                weights.append(j)
        ring = PolyRing(
            tuple(names), GREVLEX, self.base.domain, tuple(weights)
        )
        object.__setattr__(self, "ring", ring)

    def var(self, name: str, j: int) -> Poly:
        return self.ring.var(jet_var(name, j))

    def project_poly(self, f: Poly) -> Poly:
        """Pull a base function back along the point-of-the-arc projection."""
        if f.ring != self.base:
            raise ValueError("polynomial does not live in the base ring")
        images = {v: self.var(v, 0) for v in self.base.vars}
        return f.substitute(images)

    def section_poly(self, F: Poly) -> Poly:
        """Restrict a jet function to the constant arcs (x_0 = x, rest 0)."""
        if F.ring != self.ring:
            raise ValueError("polynomial does not live in the jet ring")
        images = {}
        for j in range(self.m + 1):
            for v in self.base.vars:
                images[jet_var(v, j)] = (
                    self.base.var(v) if j == 0 else self.base.zero()
                )
        return F.substitute(images)

    def lift_poly(self, F: Poly, low: "JetContext") -> Poly:
        """Transport a jet function from a lower order into this jet ring."""
        if low.base != self.base or low.m > self.m:
            raise ValueError("not a lower-order jet context of the same base")
        images = {
            jet_var(v, j): self.var(v, j)
            for j in range(low.m + 1)
            for v in self.base.vars
        }
        return F.substitute(images)


def jet_coefficients(f: Poly, ctx: JetContext) -> list[Poly]:
    """The m+1 coefficient polynomials of f along truncated arcs.

    Entry e collects the t^e coefficient of f(x_0 + x_1 t + ... + x_m t^m)
    and is homogeneous of weight e.
    """
    if f.ring != ctx.base:
        raise ValueError("polynomial does not live in the base ring")
    m = ctx.m
    R = ctx.ring

    def ser_mul(a: list[Poly], b: list[Poly]) -> list[Poly]:
        out = [R.zero() for _ in range(m + 1)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(m + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return out

    pows: dict[tuple[str, int], list[Poly]] = {}

    def var_power(name: str, k: int) -> list[Poly]:
        cached = pows.get((name, k))
        if cached is None:
            if k == 1:
                cached = [ctx.var(name, j) for j in range(m + 1)]
            else:
                half = var_power(name, k // 2)
                cached = ser_mul(half, half)
                if k % 2:
                    cached = ser_mul(cached, var_power(name, 1))
            pows[(name, k)] = cached
        return cached

    result = [R.zero() for _ in range(m + 1)]
    for e, c in f.terms.items():
        series = None
        for i, k in enumerate(e):
            if not k:
                continue
            p = var_power(f.ring.vars[i], k)
            series = p if series is None else ser_mul(series, p)
        if series is None:
            result[0] = result[0] + R.const(c)
        else:
            for d in range(m + 1):
                if series[d]:
                    result[d] = result[d] + series[d].scale(c)
    return result


@dataclass(frozen=True)
class JetIdeal:
    """The jet equations of an affine variety, one row per base generator."""

    context: JetContext
    source: Ideal
    equations: tuple[tuple[Poly, ...], ...]

    @cached_property
    def ideal(self) -> Ideal:
        flat = [F for row in self.equations for F in row if F]
        return Ideal(self.context.ring, flat)

    @property
    def m(self) -> int:
        return self.context.m

    def equation(self, i: int, e: int) -> Poly:
        return self.equations[i][e]


def jetify(I: Ideal, m: int) -> JetIdeal:
    """The order-m jet equations of the variety cut out by I."""
    ctx = JetContext(I.ring, m)
    eqs = tuple(tuple(jet_coefficients(f, ctx)) for f in I.gens)
    return JetIdeal(ctx, I, eqs)


def weight_homogeneity_check(J: JetIdeal) -> bool:
    """Every equation of t-order e is weight-homogeneous of weight e."""
    for row in J.equations:
        for e, F in enumerate(row):
            if F and F.weight_of() != e:
                return False
    return True


def gm_action_check(J: JetIdeal) -> bool:
    """Rescaling arcs by t -> s*t multiplies each equation by s^e.

    Checked literally, with a fresh scale variable s, independently of the
    weight bookkeeping on the jet ring.
    """
    ctx = J.context
    sname = fresh_name(ctx.ring.vars, "s")
    ext = PolyRing(ctx.ring.vars + (sname,), GREVLEX, ctx.ring.domain)
    s = ext.var(sname)
    scaled = {}
    plain = {}
    for j in range(ctx.m + 1):
        for v in ctx.base.vars:
            name = jet_var(v, j)
            plain[name] = ext.var(name)
            scaled[name] = ext.var(name) * s**j
    for row in J.equations:
        for e, F in enumerate(row):
            if not F:
                continue
            if F.substitute(scaled) != F.substitute(plain) * s**e:
                return False
    return True


def section_check(J: JetIdeal) -> bool:
    """Constant arcs on the variety satisfy the jet equations on the nose."""
    ctx = J.context
    for f, row in zip(J.source.gens, J.equations):
        if ctx.section_poly(row[0]) != f:
            return False
        for F in row[1:]:
            if ctx.section_poly(F):
                return False
    for f in J.source.gens:
        if ctx.section_poly(ctx.project_poly(f)) != f:
            return False
    return True


def truncation_check(I: Ideal, m_low: int, m_high: int) -> bool:
    """Forgetting arc coefficients beyond order m_low matches the low-order
    equations: rows agree up to t-order m_low after transport."""
    if m_low > m_high:
        raise ValueError("the first jet order must not exceed the second")
    low = jetify(I, m_low)
    high = jetify(I, m_high)
    for row_low, row_high in zip(low.equations, high.equations):
        for e in range(m_low + 1):
            lifted = high.context.lift_poly(row_low[e], low.context)
            if lifted != row_high[e]:
                return False
    return True


def derivation_check(f: Poly, g: Poly, ctx: JetContext) -> bool:
    """The coefficient extraction obeys the Leibniz-style convolution rule:
    the t-order-e part of f*g is the sum over a+b = e of products of the
    t-order-a part of f and the t-order-b part of g."""
    cf = jet_coefficients(f, ctx)
    cg = jet_coefficients(g, ctx)
    cfg = jet_coefficients(f * g, ctx)
    for e in range(ctx.m + 1):
        acc = ctx.ring.zero()
        for a in range(e + 1):
            acc = acc + cf[a] * cg[e - a]
        if acc != cfg[e]:
            return False
    return True


def fiber_ideal(J: JetIdeal, point: dict) -> Ideal:
    """Equations of the arcs centered at a given point of the variety.

    The point must satisfy the base equations; the result lives in the ring
    of positive-level jet variables only.
    """
    ctx = J.context
    dom = ctx.base.domain
    for name in point:
        if name not in ctx.base.vars:
            raise InputError(f"unknown coordinate {name!r} in the point")
    pt = {}
    for v in ctx.base.vars:
        if v not in point:
            raise InputError(f"the point gives no value for {v!r}")
        pt[v] = dom.convert(point[v])
    for f in J.source.gens:
        if f.evaluate(pt):
            raise PreconditionError(
                "the point does not lie on the variety"
            )
    fvars: list[str] = []
    fweights: list[int] = []
    for j in range(1, ctx.m + 1):
        for v in ctx.base.vars:
            fvars.append(jet_var(v, j))
            fweights.append(j)
    fring = PolyRing(tuple(fvars), GREVLEX, dom, tuple(fweights))
    images = {}
    for j in range(ctx.m + 1):
        for v in ctx.base.vars:
            name = jet_var(v, j)
            images[name] = (
                fring.const(pt[v]) if j == 0 else fring.var(name)
            )
    gens = []
    for row in J.equations:
        for F in row:
            if not F:
                continue
            g = F.substitute(images)
            if g:
                gens.append(g)
    return Ideal(fring, gens)


def _det(rows: list[list[Poly]], ring: PolyRing) -> Poly:
    if len(rows) == 1:
        return rows[0][0]
    acc = ring.zero()
    for c, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [r[:c] + r[c + 1 :] for r in rows[1:]]
        term = entry * _det(minor, ring)
        acc = acc - term if c % 2 else acc + term
    return acc


def jacobian_ideal(I: Ideal, budget: Budget | None = None) -> Ideal:
    """Equations of the singular locus by the rank criterion.

    Adds all c-by-c minors of the Jacobian to I, where c is the codimension
    of the zero set of I.
    """
    if not I.gens:
        raise InputError("the whole space carries no equations to rank")
    report = krull_dim(I, budget)
    if report.dim < 0:
        raise PreconditionError("the variety is empty")
    c = I.ring.nvars - report.dim
    if c == 0 or c > len(I.gens):
        return Ideal(I.ring, I.gens)
    jac = [[f.diff(v) for v in I.ring.vars] for f in I.gens]
    minors = []
    seen = set()
    for rset in combinations(range(len(I.gens)), c):
        for cset in combinations(range(I.ring.nvars), c):
            d = _det([[jac[r][cv] for cv in cset] for r in rset], I.ring)
            if d and d not in seen:
                seen.add(d)
                minors.append(d)
    return Ideal(I.ring, list(I.gens) + minors)
