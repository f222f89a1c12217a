"""High-level verdicts about jet spaces: nilpotent witnesses, component
and fiber dimensions, singular loci, and the failure of fiber-dimension
constancy, plus the bundled example regression suite.

Every verdict carries exact integers and booleans; there is no numeric
tolerance anywhere.  A verdict is ``pass`` when every computed value meets
its expectation, ``fail`` when a computation contradicts one, and
``skipped`` when a precondition is unmet or a budget ran out.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .coeffs import DEFAULT_PRIME, QQ, PrimeField
from .errors import BudgetExceededError, InputError, PreconditionError
from .groebner import (
    Budget,
    DimReport,
    Ideal,
    groebner_basis,
    krull_dim,
    normal_form,
    radical_member,
    saturate,
)
from .jets import (
    derivation_check,
    fiber_ideal,
    gm_action_check,
    jacobian_ideal,
    jet_coefficients,
    jetify,
    section_check,
    truncation_check,
    weight_homogeneity_check,
)
from .ring import Poly, PolyRing


@dataclass(frozen=True)
class Verdict:
    """Outcome of one checked claim: computed values against expectations."""

    claim: str
    status: str
    computed: dict
    expected: dict
    notes: str = ""
    flags: tuple[str, ...] = ()

    def __post_init__(self):
        if self.status not in ("pass", "fail", "skipped"):
            raise ValueError(f"bad verdict status {self.status!r}")


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def nilpotent_witness(
    I: Ideal,
    m: int,
    f: Poly,
    budget: Budget | None = None,
    claim: str | None = None,
) -> Verdict:
    """Certify a nonreduced jet space: f is not in the jet ideal but its
    square is, so f restricts to a nonzero nilpotent function."""
    J = jetify(I, m)
    if f.ring != J.context.ring:
        raise ValueError("witness does not live in the jet ring")
    nf = normal_form(f, J.ideal, budget=budget)
    nf2 = normal_form(f * f, J.ideal, budget=budget)
    ok = bool(nf) and not nf2
    return Verdict(
        claim=claim or f"nilpotent-witness-m{m}",
        status=_status(ok),
        computed={
            "member": not nf,
            "square_member": not nf2,
            "normal_form": str(nf),
            "square_normal_form": str(nf2),
        },
        expected={"member": False, "square_member": True},
    )


def main_component(
    I: Ideal,
    m: int,
    sing: Ideal | None = None,
    budget: Budget | None = None,
) -> tuple[Ideal, DimReport]:
    """Closure of the jets with smooth base point, as a saturation.

    The jet ideal is saturated by the pullback of the singular-locus
    equations (by default the Jacobian system of the base), which removes
    every component sitting over the singular locus.
    """
    if sing is None:
        sing = jacobian_ideal(I, budget)
    if sing.ring != I.ring:
        raise ValueError("singular-locus ideal lives in a different ring")
    J = jetify(I, m)
    ctx = J.context
    pulled = Ideal(ctx.ring, [ctx.project_poly(g) for g in sing.gens])
    sat = saturate(J.ideal, pulled, budget)
    return sat, krull_dim(sat, budget)


def irreducibility_failure_check(
    I: Ideal,
    m: int,
    point: dict | None = None,
    sing: Ideal | None = None,
    budget: Budget | None = None,
    claim: str | None = None,
) -> Verdict:
    """Certify that the jet space is reducible, by exhibiting a fiber over
    a singular point whose dimension exceeds the main component's.

    With a smooth base, or a singular point whose fiber stays small, the
    check honestly fails to certify anything.
    """
    claim = claim or f"irreducibility-failure-m{m}"
    if point is None:
        point = {v: 0 for v in I.ring.vars}
    J = jetify(I, m)
    try:
        fib = fiber_ideal(J, point)
    except PreconditionError as exc:
        return Verdict(
            claim=claim,
            status="skipped",
            computed={},
            expected={"fiber_exceeds_main": True},
            notes=str(exc),
        )
    fdim = krull_dim(fib, budget)
    _, mdim = main_component(I, m, sing, budget)
    ok = fdim.dim > mdim.dim
    return Verdict(
        claim=claim,
        status=_status(ok),
        computed={
            "fiber_dim": fdim.dim,
            "main_dim": mdim.dim,
            "fiber_exceeds_main": ok,
        },
        expected={"fiber_exceeds_main": True},
    )


def flatness_fiber_gap(
    d: int,
    m: int,
    field=QQ,
    budget: Budget | None = None,
    second_witness: bool = False,
    claim: str | None = None,
) -> Verdict:
    """Fiber dimensions of the coordinate projection of t^d + x^d + y^d = 0
    jump at the special fiber, so the projected family of jet spaces is
    not flat.  Requires m >= 2; small d and m keep the computation exact
    at desk scale."""
    claim = claim or f"flatness-gap-d{d}-m{m}"
    if d < 3 or d > 4 or m > 3:
        raise InputError("supported ranges are 3 <= d <= 4 and m <= 3")
    if m < 2:
        return Verdict(
            claim=claim,
            status="skipped",
            computed={},
            expected={},
            notes="the dimension-gap argument needs jet order at least 2",
        )
    ring = PolyRing(("t", "x", "y"), domain=field)
    f = ring.var("t") ** d + ring.var("x") ** d + ring.var("y") ** d
    J = jetify(Ideal(ring, (f,)), m)
    t0 = J.context.var("t", 0)
    one = J.context.ring.one()
    generic = krull_dim(J.ideal.with_extra(t0 - one), budget)
    special = krull_dim(J.ideal.with_extra(t0), budget)
    computed = {
        "generic_dim": generic.dim,
        "special_dim": special.dim,
        "strict_gap": special.dim > generic.dim,
    }
    ok = special.dim > generic.dim == 2 * m + 1
    if second_witness:
        two = J.context.ring.const(2)
        generic2 = krull_dim(J.ideal.with_extra(t0 - two), budget)
        computed["generic_dim_second_witness"] = generic2.dim
        ok = ok and generic2.dim == 2 * m + 1
    return Verdict(
        claim=claim,
        status=_status(ok),
        computed=computed,
        expected={
            "generic_dim": 2 * m + 1,
            "special_dim_at_least": 2 * m + 2,
            "strict_gap": True,
        },
    )


def quadric_x1_report(
    n: int,
    field=QQ,
    budget: Budget | None = None,
    claim: str | None = None,
) -> Verdict:
    """First-order jets of the rank-n quadric cone: the two defining
    equations in closed form, the singular locus cut out by the order-0
    variables, its dimension n, and the jet-space dimension 2n - 2."""
    claim = claim or f"quadric-x1-n{n}"
    if n < 3 or n > 6:
        raise InputError("supported range is 3 <= n <= 6")
    names = tuple(f"x{i}" for i in range(1, n + 1))
    ring = PolyRing(names, domain=field)
    f = ring.zero()
    for v in names:
        f = f + ring.var(v) * ring.var(v)
    I = Ideal(ring, (f,))
    J = jetify(I, 1)
    ctx = J.context
    expected_f0 = ctx.ring.zero()
    expected_f1 = ctx.ring.zero()
    for v in names:
        x0 = ctx.var(v, 0)
        x1 = ctx.var(v, 1)
        expected_f0 = expected_f0 + x0 * x0
        expected_f1 = expected_f1 + ctx.ring.const(2) * x0 * x1
    eqs_match = (
        len(J.equations) == 1
        and J.equations[0][0] == expected_f0
        and J.equations[0][1] == expected_f1
    )
    sing = jacobian_ideal(J.ideal, budget)
    rad = all(radical_member(ctx.var(v, 0), sing, budget) for v in names)
    sdim = krull_dim(sing, budget)
    xdim = krull_dim(J.ideal, budget)
    ok = eqs_match and rad and sdim.dim == n and xdim.dim == 2 * n - 2
    return Verdict(
        claim=claim,
        status=_status(ok),
        computed={
            "equations_match": eqs_match,
            "order0_vars_in_radical": rad,
            "sing_dim": sdim.dim,
            "dim": xdim.dim,
        },
        expected={
            "equations_match": True,
            "order0_vars_in_radical": True,
            "sing_dim": n,
            "dim": 2 * n - 2,
        },
    )


def smooth_fiber_check(
    I: Ideal,
    m: int,
    point: dict,
    budget: Budget | None = None,
    claim: str | None = None,
) -> Verdict:
    """Over a smooth point the arcs form an affine space: the fiber
    dimension equals m times the dimension of the base."""
    claim = claim or f"smooth-fiber-m{m}"
    base_dim = krull_dim(I, budget).dim
    J = jetify(I, m)
    fib = fiber_ideal(J, point)
    fdim = krull_dim(fib, budget)
    return Verdict(
        claim=claim,
        status=_status(fdim.dim == m * base_dim),
        computed={"fiber_dim": fdim.dim, "base_dim": base_dim},
        expected={"fiber_dim": m * base_dim},
    )


def _random_poly(ring: PolyRing, rng: random.Random, max_degree: int) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, 4)):
        e = [0] * ring.nvars
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            e[rng.randrange(ring.nvars)] += 1
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return ring.poly(terms)


def structural_suite(
    count: int = 20,
    seed: int = 20260814,
    field=QQ,
    claim: str = "structural",
) -> Verdict:
    """Ring-level laws of the jet construction on a random corpus: weight
    homogeneity, the literal arc-rescaling action, the constant-arc
    section, compatibility with forgetting higher coefficients, linearity,
    and the convolution rule for products."""
    rng = random.Random(seed)
    var_pool = ("x", "y", "z")
    failures: list[str] = []
    checked = 0
    while checked < count:
        nvars = rng.randint(1, 3)
        ring = PolyRing(var_pool[:nvars], domain=field)
        ngens = rng.randint(1, 3)
        gens = [_random_poly(ring, rng, 3) for _ in range(ngens)]
        I = Ideal(ring, gens)
        if not I.gens:
            continue
        checked += 1
        m = rng.randint(1, 3)
        J = jetify(I, m)
        label = f"#{checked}(vars={nvars},m={m})"
        if not weight_homogeneity_check(J):
            failures.append(f"{label}: weight homogeneity")
        if not gm_action_check(J):
            failures.append(f"{label}: arc rescaling")
        if not section_check(J):
            failures.append(f"{label}: constant-arc section")
        if m > 1 and not truncation_check(I, rng.randint(0, m - 1), m):
            failures.append(f"{label}: truncation")
        f = _random_poly(ring, rng, 3)
        g = _random_poly(ring, rng, 3)
        if not derivation_check(f, g, J.context):
            failures.append(f"{label}: product rule")
        sums = jet_coefficients(f + g, J.context)
        cf = jet_coefficients(f, J.context)
        cg = jet_coefficients(g, J.context)
        if any(sums[e] != cf[e] + cg[e] for e in range(m + 1)):
            failures.append(f"{label}: linearity")
    return Verdict(
        claim=claim,
        status=_status(not failures and checked >= 20),
        computed={"ideals": checked, "failures": len(failures)},
        expected={"ideals": max(count, 20), "failures": 0},
        notes="; ".join(failures[:5]),
    )


def _cone_ideal(field) -> Ideal:
    ring = PolyRing(("x", "y", "z"), domain=field)
    f = (
        ring.var("x") * ring.var("x")
        + ring.var("y") * ring.var("y")
        + ring.var("z") * ring.var("z")
    )
    return Ideal(ring, (f,))


def _curve_ideal(field) -> Ideal:
    ring = PolyRing(("x", "y", "z"), domain=field)
    x, y, z = ring.var("x"), ring.var("y"), ring.var("z")
    return Ideal(ring, (x**3 - y * y, x * x - z**3))


def _graph_ideal(field) -> Ideal:
    ring = PolyRing(("x", "y", "z"), domain=field)
    return Ideal(ring, (ring.var("z") - ring.var("x") * ring.var("y"),))


def _origin(I: Ideal) -> dict:
    return {v: 0 for v in I.ring.vars}


def _cone_dim_verdict(m, field, budget, claim):
    J = jetify(_cone_ideal(field), m)
    rep = krull_dim(J.ideal, budget)
    return Verdict(
        claim=claim,
        status=_status(rep.dim == 2 * (m + 1)),
        computed={"dim": rep.dim, "witness": list(rep.witness)},
        expected={"dim": 2 * (m + 1)},
    )


def _cone_fiber_verdict(m, field, budget, claim):
    I = _cone_ideal(field)
    J = jetify(I, m)
    rep = krull_dim(fiber_ideal(J, _origin(I)), budget)
    return Verdict(
        claim=claim,
        status=_status(rep.dim == 2 * m + 1),
        computed={"dim": rep.dim},
        expected={"dim": 2 * m + 1},
    )


def _cone_sing_verdict(m, field, budget, claim):
    J = jetify(_cone_ideal(field), m)
    rep = krull_dim(jacobian_ideal(J.ideal, budget), budget)
    return Verdict(
        claim=claim,
        status=_status(rep.dim == 2 * m + 1),
        computed={"dim": rep.dim},
        expected={"dim": 2 * m + 1},
    )


def _curve_verdict(m, field, budget, claim):
    I = _curve_ideal(field)
    J = jetify(I, m)
    fib = krull_dim(fiber_ideal(J, _origin(I)), budget)
    _, main = main_component(I, m, None, budget)
    ok = main.dim == m + 1 and fib.dim >= m + 2 and fib.dim > main.dim
    return Verdict(
        claim=claim,
        status=_status(ok),
        computed={
            "main_dim": main.dim,
            "fiber_dim": fib.dim,
            "fiber_exceeds_main": fib.dim > main.dim,
        },
        expected={
            "main_dim": m + 1,
            "fiber_dim_at_least": m + 2,
            "fiber_exceeds_main": True,
        },
    )


def _smooth_graph_verdict(m, field, budget, claim):
    J = jetify(_graph_ideal(field), m)
    rep = krull_dim(J.ideal, budget)
    sing = jacobian_ideal(J.ideal, budget)
    gb = groebner_basis(sing, budget=budget)
    unit = len(gb) == 1 and gb[0].is_constant()
    return Verdict(
        claim=claim,
        status=_status(rep.dim == 2 * (m + 1) and unit),
        computed={"dim": rep.dim, "jet_jacobian_unit": unit},
        expected={"dim": 2 * (m + 1), "jet_jacobian_unit": True},
    )


def _nilpotent_verdict(m, field, budget, claim):
    ring = PolyRing(("x", "y"), domain=field)
    I = Ideal(ring, (ring.var("x") * ring.var("y"),))
    ctx = jetify(I, m).context
    f = ctx.var("x", 0) * ctx.var("y", 1)
    return nilpotent_witness(I, m, f, budget, claim)


def _flatness_verdict(m, field, budget, claim):
    return flatness_fiber_gap(3, m, field, budget, claim=claim)


def _quadric_verdict(n):
    def build(field, budget, claim):
        return quadric_x1_report(n, field, budget, claim)

    return build


def _structural_verdict(field, budget, claim):
    return structural_suite(20, field=field, claim=claim)


_CATALOG: list[tuple[str, object, bool]] = [
    ("ex3.1-m1", lambda f, b, c: _nilpotent_verdict(1, f, b, c), False),
    ("ex3.1-m2", lambda f, b, c: _nilpotent_verdict(2, f, b, c), False),
    ("ex3.1-m3", lambda f, b, c: _nilpotent_verdict(3, f, b, c), False),
    ("ex3.5-dim-m1", lambda f, b, c: _cone_dim_verdict(1, f, b, c), False),
    ("ex3.5-dim-m2", lambda f, b, c: _cone_dim_verdict(2, f, b, c), False),
    ("ex3.5-fiber-m1", lambda f, b, c: _cone_fiber_verdict(1, f, b, c), False),
    ("ex3.5-fiber-m2", lambda f, b, c: _cone_fiber_verdict(2, f, b, c), False),
    ("ex3.5-sing-m1", lambda f, b, c: _cone_sing_verdict(1, f, b, c), False),
    ("ex3.5-sing-m2", lambda f, b, c: _cone_sing_verdict(2, f, b, c), False),
    ("ex3.3-m1", lambda f, b, c: _curve_verdict(1, f, b, c), True),
    ("ex3.3-m2", lambda f, b, c: _curve_verdict(2, f, b, c), True),
    ("ex3.12-n3", _quadric_verdict(3), False),
    ("ex3.12-n4", _quadric_verdict(4), False),
    ("ex3.12-n5", _quadric_verdict(5), False),
    ("ex4.2-d3-m2", lambda f, b, c: _flatness_verdict(2, f, b, c), True),
    ("smooth-graph-m1", lambda f, b, c: _smooth_graph_verdict(1, f, b, c), False),
    ("smooth-graph-m2", lambda f, b, c: _smooth_graph_verdict(2, f, b, c), False),
    ("structural", _structural_verdict, False),
]


def claim_ids() -> list[str]:
    return [cid for cid, _, _ in _CATALOG]


def _matches(cid: str, filters) -> bool:
    """Prefix match on whole claim-id segments, so that a filter never
    bleeds into a neighboring claim (ex3.1 must not select ex3.12)."""
    if not filters:
        return True
    return any(
        cid == tok or cid.startswith(tok + "-") or cid.startswith(tok + ".")
        for tok in filters
    )


def example_suite(
    filters=None,
    field=QQ,
    budget_ms: int | None = None,
) -> list[Verdict]:
    """Run the bundled example claims in catalog order.

    Each claim gets a fresh time budget.  Over the rationals, claims marked
    as saturation-heavy fall back to the default prime field when the
    budget runs out, and the verdict is flagged; any other budget overrun
    yields a skipped verdict.
    """
    verdicts: list[Verdict] = []
    base_flags: tuple[str, ...] = ()
    if isinstance(field, PrimeField):
        base_flags = (f"char {field.p}",)
    for cid, build, may_fall_back in _CATALOG:
        if not _matches(cid, filters):
            continue
        try:
            v = build(field, Budget(budget_ms).start(), cid)
            v = replace(v, flags=v.flags + base_flags)
        except BudgetExceededError as exc:
            if may_fall_back and not isinstance(field, PrimeField):
                fallback = PrimeField(DEFAULT_PRIME)
                try:
                    v = build(fallback, Budget(budget_ms).start(), cid)
                    v = replace(
                        v,
                        flags=v.flags
                        + (f"char {DEFAULT_PRIME} (budget fallback)",),
                    )
                except BudgetExceededError as exc2:
                    v = Verdict(
                        claim=cid,
                        status="skipped",
                        computed={},
                        expected={},
                        notes=str(exc2),
                        flags=base_flags,
                    )
            else:
                v = Verdict(
                    claim=cid,
                    status="skipped",
                    computed={},
                    expected={},
                    notes=str(exc),
                    flags=base_flags,
                )
        verdicts.append(v)
    return verdicts
