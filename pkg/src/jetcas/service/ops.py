"""Pure handlers behind both the HTTP routes and the CLI subcommands.

Each handler takes a job description plus run options and returns a
response model.  Domain errors propagate as the package exception types;
the HTTP layer and the CLI map them to status codes and exit codes.
"""

from __future__ import annotations

from fractions import Fraction

from ..analysis import example_suite, main_component
from ..coeffs import DEFAULT_PRIME, QQ, PrimeField
from ..errors import InputError
from ..groebner import Budget, Ideal, groebner_basis, krull_dim, normal_form
from ..jets import fiber_ideal, jacobian_ideal, jetify
from ..orders import GREVLEX, LEX
from ..parser import parse_poly
from ..ring import PolyRing
from .schemas import (
    ComponentResponse,
    ComputeResponse,
    DimResponse,
    FiberResponse,
    JobSpec,
    MemberResponse,
    RingSpec,
    SingResponse,
    SuiteRequest,
    SuiteResponse,
    VerdictRow,
)


def build_domain(spec: RingSpec):
    if spec.modulus is None:
        return QQ
    return PrimeField(spec.modulus)


def build_ring(spec: RingSpec) -> PolyRing:
    order = LEX if spec.order == "lex" else GREVLEX
    return PolyRing(tuple(spec.vars), order, build_domain(spec))


def build_ideal(ring: PolyRing, generators) -> Ideal:
    return Ideal(ring, [parse_poly(ring, src) for src in generators])


def parse_field_name(name: str):
    """Field selector strings: 'rational' or 'prime:<p>' (default prime)."""
    if name == "rational":
        return QQ
    if name == "prime":
        return PrimeField(DEFAULT_PRIME)
    if name.startswith("prime:"):
        tail = name.split(":", 1)[1]
        try:
            p = int(tail)
        except ValueError:
            raise InputError(f"bad prime {tail!r} in field selector") from None
        return PrimeField(p)
    raise InputError(
        f"unknown field {name!r}: expected 'rational' or 'prime:<p>'"
    )


def _require_m(spec: JobSpec) -> int:
    if spec.m is None:
        raise InputError("the jet order m is required for this command")
    return spec.m


def _convert_point_value(domain, raw):
    if isinstance(raw, int):
        return domain.convert(raw)
    text = str(raw).strip()
    try:
        frac = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad coordinate value {text!r}") from None
    return domain.from_literal(frac.numerator, frac.denominator)


def _point_dict(spec: JobSpec, ring: PolyRing) -> dict:
    if spec.point is None:
        raise InputError("a point is required for this command")
    if len(spec.point) != ring.nvars:
        raise InputError(
            f"the point has {len(spec.point)} coordinates, "
            f"the ring has {ring.nvars} variables"
        )
    return {
        v: _convert_point_value(ring.domain, raw)
        for v, raw in zip(ring.vars, spec.point)
    }


def compute_op(spec: JobSpec) -> ComputeResponse:
    m = _require_m(spec)
    ring = build_ring(spec.ring)
    I = build_ideal(ring, spec.generators)
    J = jetify(I, m)
    weights: list[int] = []
    equations: list[str] = []
    gen_index: list[int] = []
    for i, row in enumerate(J.equations):
        for e, F in enumerate(row):
            weights.append(e)
            equations.append(str(F))
            gen_index.append(i)
    return ComputeResponse(
        vars=list(J.context.ring.vars),
        weights=weights,
        equations=equations,
        generator_index=gen_index,
    )


def _dim_response(report, verbose: bool) -> DimResponse:
    return DimResponse(
        dim=report.dim,
        witness=list(report.witness),
        basis_size=report.basis_size,
        elapsed_ms=report.elapsed_ms if verbose else None,
    )


def dim_op(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> DimResponse:
    m = _require_m(spec)
    ring = build_ring(spec.ring)
    I = build_ideal(ring, spec.generators)
    J = jetify(I, m)
    report = krull_dim(J.ideal, Budget(budget_ms).start())
    return _dim_response(report, verbose)


def member_op(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> MemberResponse:
    m = _require_m(spec)
    if spec.f is None:
        raise InputError("a test polynomial --f is required for this command")
    ring = build_ring(spec.ring)
    I = build_ideal(ring, spec.generators)
    J = jetify(I, m)
    budget = Budget(budget_ms).start()
    f = parse_poly(J.context.ring, spec.f)
    nf = normal_form(f, J.ideal, budget=budget)
    out = MemberResponse(member=not nf, normal_form=str(nf))
    if spec.with_square:
        nf2 = normal_form(f * f, J.ideal, budget=budget)
        out.square_member = not nf2
        out.square_normal_form = str(nf2)
    return out


def fiber_op(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> FiberResponse:
    m = _require_m(spec)
    ring = build_ring(spec.ring)
    I = build_ideal(ring, spec.generators)
    point = _point_dict(spec, ring)
    J = jetify(I, m)
    fib = fiber_ideal(J, point)
    report = krull_dim(fib, Budget(budget_ms).start())
    return FiberResponse(
        dim=report.dim,
        witness=list(report.witness),
        vars=list(fib.ring.vars),
        generators=[str(g) for g in fib.gens],
        elapsed_ms=report.elapsed_ms if verbose else None,
    )


def component_op(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> ComponentResponse:
    m = _require_m(spec)
    ring = build_ring(spec.ring)
    I = build_ideal(ring, spec.generators)
    sing = None
    if spec.sing:
        sing = build_ideal(ring, spec.sing)
    budget = Budget(budget_ms).start()
    sat, report = main_component(I, m, sing, budget)
    return ComponentResponse(
        dim=report.dim,
        witness=list(report.witness),
        generators=[str(g) for g in groebner_basis(sat, budget=budget)],
        elapsed_ms=report.elapsed_ms if verbose else None,
    )


def sing_op(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> SingResponse:
    m = _require_m(spec)
    ring = build_ring(spec.ring)
    I = build_ideal(ring, spec.generators)
    J = jetify(I, m)
    budget = Budget(budget_ms).start()
    sing = jacobian_ideal(J.ideal, budget)
    report = krull_dim(sing, budget)
    return SingResponse(
        dim=report.dim,
        witness=list(report.witness),
        generators=[str(g) for g in sing.gens],
        elapsed_ms=report.elapsed_ms if verbose else None,
    )


def suite_op(req: SuiteRequest) -> SuiteResponse:
    field = parse_field_name(req.field)
    verdicts = example_suite(req.filter, field, req.budget_ms)
    rows = [
        VerdictRow(
            claim=v.claim,
            status=v.status,
            computed=v.computed,
            expected=v.expected,
            notes=v.notes,
            flags=list(v.flags),
        )
        for v in verdicts
    ]
    return SuiteResponse(
        rows=rows,
        passed=sum(1 for v in verdicts if v.status == "pass"),
        failed=sum(1 for v in verdicts if v.status == "fail"),
        skipped=sum(1 for v in verdicts if v.status == "skipped"),
    )
