"""Acceptance gate: the eight headline checks, one test per criterion.

Each test prints a single [acceptance] line with PASS or FAIL before
asserting, so a scan of the output shows the per-criterion outcome even
when a computation inside went wrong.
"""

import random

from jetcas import (
    BudgetExceededError,
    Ideal,
    PolyRing,
    PrimeField,
    QQ,
    flatness_fiber_gap,
    fiber_ideal,
    groebner_basis,
    irreducibility_failure_check,
    jacobian_ideal,
    jetify,
    krull_dim,
    nilpotent_witness,
    normal_form,
    quadric_x1_report,
    structural_suite,
)

from conftest import random_poly
from oracles import MacaulayOracle


def _report(n: int, label: str, ok: bool) -> bool:
    print(f"[acceptance] criterion {n} ({label}): {'PASS' if ok else 'FAIL'}")
    return ok


def test_criterion_1_nonreduced_jet_witness():
    ring = PolyRing(("x", "y"))
    I = Ideal(ring, (ring.var("x") * ring.var("y"),))
    results = {}
    for m in (1, 2, 3):
        ctx = jetify(I, m).context
        f = ctx.var("x", 0) * ctx.var("y", 1)
        v = nilpotent_witness(I, m, f)
        results[m] = (
            v.status,
            v.computed["member"],
            v.computed["square_member"],
        )
    ok = all(results[m] == ("pass", False, True) for m in (1, 2, 3))
    assert _report(1, "nonreduced jet witness", ok), results


def test_criterion_2_cone_jet_and_fiber_dimensions():
    ring = PolyRing(("x", "y", "z"))
    x, y, z = (ring.var(v) for v in "xyz")
    cone = Ideal(ring, (x ** 2 + y ** 2 + z ** 2,))
    origin = {"x": 0, "y": 0, "z": 0}
    results = {}
    for m in (1, 2):
        J = jetify(cone, m)
        dim = krull_dim(J.ideal).dim
        fib = krull_dim(fiber_ideal(J, origin)).dim
        results[m] = (dim, fib)
    ok = all(results[m] == (2 * (m + 1), 2 * m + 1) for m in (1, 2))
    assert _report(2, "cone jet and fiber dimensions", ok), results


def test_criterion_3_singular_curve_components():
    results = {}
    flags = []
    for m in (1, 2):
        try:
            v = irreducibility_failure_check(_curve(QQ), m)
        except BudgetExceededError:
            v = irreducibility_failure_check(_curve(PrimeField(32003)), m)
            flags.append(f"m={m} over char 32003 (budget fallback)")
        results[m] = (v.status, v.computed["main_dim"], v.computed["fiber_dim"])
    ok = all(
        results[m][0] == "pass"
        and results[m][1] == m + 1
        and results[m][2] >= m + 2
        for m in (1, 2)
    )
    label = "singular curve components"
    if flags:
        label += "; " + ", ".join(flags)
    assert _report(3, label, ok), results


def _curve(field):
    ring = PolyRing(("x", "y", "z"), domain=field)
    x, y, z = (ring.var(v) for v in "xyz")
    return Ideal(ring, (x ** 3 - y ** 2, x ** 2 - z ** 3))


def test_criterion_4_quadric_first_jets():
    results = {n: quadric_x1_report(n) for n in (3, 4, 5)}
    ok = all(
        v.status == "pass"
        and v.computed["equations_match"]
        and v.computed["order0_vars_in_radical"]
        and v.computed["sing_dim"] == n
        and v.computed["dim"] == 2 * n - 2
        for n, v in results.items()
    )
    assert _report(4, "quadric first jets", ok), {
        n: v.computed for n, v in results.items()
    }


def test_criterion_5_fiber_dimension_gap():
    v = flatness_fiber_gap(3, 2, second_witness=True)
    ok = (
        v.status == "pass"
        and v.computed["generic_dim"] == 5
        and v.computed["special_dim"] >= 6
        and v.computed["generic_dim_second_witness"] == 5
    )
    assert _report(5, "fiber dimension gap", ok), v.computed


def test_criterion_6_structural_laws():
    v = structural_suite(20)
    ok = (
        v.status == "pass"
        and v.computed["ideals"] >= 20
        and v.computed["failures"] == 0
    )
    assert _report(6, "structural laws on a random corpus", ok), v.computed


def test_criterion_7_smooth_graph_jets():
    ring = PolyRing(("x", "y", "z"))
    graph = Ideal(ring, (ring.var("z") - ring.var("x") * ring.var("y"),))
    results = {}
    for m in (1, 2):
        J = jetify(graph, m)
        dim = krull_dim(J.ideal).dim
        gb = groebner_basis(jacobian_ideal(J.ideal))
        unit = len(gb) == 1 and gb[0].is_constant()
        results[m] = (dim, unit)
    ok = all(results[m] == (2 * (m + 1), True) for m in (1, 2))
    assert _report(7, "smooth graph jets", ok), results


def test_criterion_8_membership_matches_linear_algebra():
    rng = random.Random(20260814)
    ideals = 0
    agreements = 0
    disagreements = []
    while ideals < 50:
        nvars = rng.randint(1, 3)
        ring = PolyRing(("x", "y", "z")[:nvars])
        gens = [
            random_poly(rng, ring, max_degree=3)
            for _ in range(rng.randint(1, 3))
        ]
        I = Ideal(ring, gens)
        if not I.gens:
            continue
        ideals += 1
        gen_dicts = [dict(g.terms) for g in I.gens]

        probes = []
        # Members by construction, with a representation within degree 5.
        for _ in range(2):
            f = ring.zero()
            for g in I.gens:
                cof = random_poly(
                    rng, ring, max_degree=max(0, 5 - g.degree()), max_terms=2
                )
                f = f + cof * g
            if f and f.degree() <= 5:
                probes.append(f)
        # Random probes of degree at most 5.
        for _ in range(3):
            probes.append(random_poly(rng, ring, max_degree=5))

        for f in probes:
            claimed = not normal_form(f, I)
            if claimed:
                # The oracle must certify the member at some bounded cap.
                caps = range(max(f.degree(), 1), 10)
                found = any(
                    MacaulayOracle(nvars, gen_dicts, cap).is_member(
                        dict(f.terms)
                    )
                    for cap in caps
                )
                if found:
                    agreements += 1
                else:
                    disagreements.append((ideals, str(f), "member"))
            else:
                # A non-member must never be certified by the oracle.
                cap = f.degree() + 3
                if MacaulayOracle(nvars, gen_dicts, cap).is_member(
                    dict(f.terms)
                ):
                    disagreements.append((ideals, str(f), "non-member"))
                else:
                    agreements += 1

    ok = ideals == 50 and not disagreements and agreements >= 200
    print(
        f"[acceptance] criterion 8 details: {ideals} ideals, "
        f"{agreements} agreements, {len(disagreements)} disagreements"
    )
    assert _report(8, "membership matches linear algebra", ok), disagreements
