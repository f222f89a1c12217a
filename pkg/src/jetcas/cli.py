"""Command-line surface.

The CLI is a thin client over the service handlers: it assembles a job
from flags or a JSON file, runs it in process (or against a remote server
with ``--server``), and renders the response as text or JSON.  Default
output is deterministic; timings appear only under ``--verbose``.

Exit codes: 0 success, 1 a suite claim failed, 2 malformed input,
3 semantic precondition unmet, 4 computation budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import (
    BudgetExceededError,
    InputError,
    ParseError,
    PreconditionError,
)
from .service import ops
from .service.schemas import (
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
)

_REMOTE_CODE_TO_EXIT = {
    "input_error": 2,
    "precondition_failed": 3,
    "budget_exceeded": 4,
}


def _field_to_modulus(field: str) -> int | None:
    domain = ops.parse_field_name(field)
    return getattr(domain, "modulus", None)


def _job_from_args(args) -> JobSpec:
    if args.spec is not None:
        blocked = [
            ("--vars", args.vars),
            ("--ideal", args.ideal),
            ("--m", args.m),
            ("--f", getattr(args, "f", None)),
            ("--point", getattr(args, "point", None)),
            ("--sing", getattr(args, "sing", None)),
        ]
        for flag, value in blocked:
            if value is not None:
                raise InputError(f"{flag} cannot be combined with --spec")
        raw = (
            sys.stdin.read()
            if args.spec == "-"
            else open(args.spec, "r", encoding="utf-8").read()
        )
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad JSON job: {exc}") from None
        return JobSpec.model_validate(data)
    if args.vars is None:
        raise InputError("either --vars or --spec is required")
    ring = RingSpec(
        vars=[v.strip() for v in args.vars.split(",") if v.strip()],
        order=args.order,
        modulus=_field_to_modulus(args.field),
    )
    point = getattr(args, "point", None)
    return JobSpec(
        ring=ring,
        generators=args.ideal or [],
        m=args.m,
        f=getattr(args, "f", None),
        point=(
            [p.strip() for p in point.split(",")] if point is not None
            else None
        ),
        sing=getattr(args, "sing", None),
        with_square=bool(getattr(args, "with_square", False)),
    )


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _emit_json(model):
    _emit(model.model_dump_json(indent=2, exclude_none=True))


def _post(args, path: str, payload: dict, params: dict):
    import httpx

    url = args.server.rstrip("/") + path
    try:
        resp = httpx.post(url, json=payload, params=params, timeout=None)
    except httpx.HTTPError as exc:
        raise InputError(f"cannot reach server: {exc}") from None
    if resp.status_code == 200:
        return resp.json()
    try:
        detail = resp.json().get("detail", {})
    except ValueError:
        detail = {}
    code = detail.get("code", "input_error")
    message = detail.get("message", resp.text)
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(_REMOTE_CODE_TO_EXIT.get(code, 2))


def _run_params(args) -> dict:
    params: dict = {}
    if args.budget_ms is not None:
        params["budget_ms"] = args.budget_ms
    if args.verbose:
        params["verbose"] = "true"
    return params


def _render_report_extras(args, resp):
    if not args.verbose:
        return
    _emit("witness = " + ", ".join(resp.witness))
    if hasattr(resp, "basis_size"):
        _emit(f"basis size = {resp.basis_size}")
    if resp.elapsed_ms is not None:
        _emit(f"elapsed ms = {resp.elapsed_ms:.1f}")


def cmd_compute(args) -> int:
    spec = _job_from_args(args)
    if args.server:
        data = _post(args, "/compute", spec.model_dump(mode="json"), {})
        resp = ComputeResponse.model_validate(data)
    else:
        resp = ops.compute_op(spec)
    if args.json:
        _emit_json(resp)
        return 0
    for gi, w, eq in zip(resp.generator_index, resp.weights, resp.equations):
        _emit(f"F{gi + 1}[{w}] (weight {w}) = {eq}")
    return 0


def cmd_dim(args) -> int:
    spec = _job_from_args(args)
    if args.server:
        data = _post(
            args, "/dim", spec.model_dump(mode="json"), _run_params(args)
        )
        resp = DimResponse.model_validate(data)
    else:
        resp = ops.dim_op(spec, args.budget_ms, args.verbose)
    if args.json:
        _emit_json(resp)
        return 0
    _emit(str(resp.dim))
    _render_report_extras(args, resp)
    return 0


def cmd_member(args) -> int:
    spec = _job_from_args(args)
    if args.server:
        data = _post(
            args, "/member", spec.model_dump(mode="json"), _run_params(args)
        )
        resp = MemberResponse.model_validate(data)
    else:
        resp = ops.member_op(spec, args.budget_ms, args.verbose)
    if args.json:
        _emit_json(resp)
        return 0
    parts = ["a member" if resp.member else "not a member"]
    if resp.square_member is not None:
        parts.append(
            "square is a member"
            if resp.square_member
            else "square is not a member"
        )
    _emit("; ".join(parts))
    if args.verbose:
        _emit(f"normal form = {resp.normal_form}")
        if resp.square_normal_form is not None:
            _emit(f"square normal form = {resp.square_normal_form}")
    return 0


def cmd_fiber(args) -> int:
    spec = _job_from_args(args)
    if args.server:
        data = _post(
            args, "/fiber", spec.model_dump(mode="json"), _run_params(args)
        )
        resp = FiberResponse.model_validate(data)
    else:
        resp = ops.fiber_op(spec, args.budget_ms, args.verbose)
    if args.json:
        _emit_json(resp)
        return 0
    _emit(str(resp.dim))
    if args.verbose:
        _emit("witness = " + ", ".join(resp.witness))
        for g in resp.generators:
            _emit(f"generator: {g}")
        if resp.elapsed_ms is not None:
            _emit(f"elapsed ms = {resp.elapsed_ms:.1f}")
    return 0


def cmd_main_component(args) -> int:
    spec = _job_from_args(args)
    if args.server:
        data = _post(
            args,
            "/main-component",
            spec.model_dump(mode="json"),
            _run_params(args),
        )
        resp = ComponentResponse.model_validate(data)
    else:
        resp = ops.component_op(spec, args.budget_ms, args.verbose)
    if args.json:
        _emit_json(resp)
        return 0
    _emit(str(resp.dim))
    if args.verbose:
        _emit("witness = " + ", ".join(resp.witness))
        for g in resp.generators:
            _emit(f"generator: {g}")
        if resp.elapsed_ms is not None:
            _emit(f"elapsed ms = {resp.elapsed_ms:.1f}")
    return 0


def cmd_sing(args) -> int:
    spec = _job_from_args(args)
    if args.server:
        data = _post(
            args, "/sing", spec.model_dump(mode="json"), _run_params(args)
        )
        resp = SingResponse.model_validate(data)
    else:
        resp = ops.sing_op(spec, args.budget_ms, args.verbose)
    if args.json:
        _emit_json(resp)
        return 0
    _emit(str(resp.dim))
    if args.verbose:
        _emit("witness = " + ", ".join(resp.witness))
        for g in resp.generators:
            _emit(f"generator: {g}")
        if resp.elapsed_ms is not None:
            _emit(f"elapsed ms = {resp.elapsed_ms:.1f}")
    return 0


def _format_values(values: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in values.items())


def cmd_examples(args) -> int:
    filters = None
    if args.filter:
        filters = [
            tok.strip()
            for chunk in args.filter
            for tok in chunk.split(",")
            if tok.strip()
        ]
    req = SuiteRequest(
        filter=filters, field=args.field, budget_ms=args.budget_ms
    )
    if args.server:
        data = _post(args, "/examples", req.model_dump(mode="json"), {})
        resp = SuiteResponse.model_validate(data)
    else:
        resp = ops.suite_op(req)
    if args.json:
        _emit_json(resp)
    else:
        for row in resp.rows:
            line = (
                f"{row.claim:<16} {row.status:<8}"
                f"{_format_values(row.computed)}"
            )
            if row.expected:
                line += f" | expect: {_format_values(row.expected)}"
            if row.flags:
                line += " [" + ", ".join(row.flags) + "]"
            if row.notes:
                line += f" ({row.notes})"
            _emit(line)
        _emit(
            f"{resp.passed} passed, {resp.failed} failed, "
            f"{resp.skipped} skipped"
        )
    return 1 if resp.failed else 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run(
        "jetcas.service.app:app", host=args.host, port=args.port
    )
    return 0


def _add_ring_flags(p: argparse.ArgumentParser):
    p.add_argument("--vars", help="comma-separated base variable names")
    p.add_argument(
        "--order",
        default="grevlex",
        choices=("grevlex", "lex"),
        help="monomial order of the base ring",
    )
    p.add_argument(
        "--ideal",
        action="append",
        metavar="POLY",
        help="a generator of the base ideal (repeatable)",
    )
    p.add_argument(
        "--field",
        default="rational",
        help="coefficient field: 'rational' or 'prime:<p>'",
    )
    p.add_argument("--m", type=int, help="jet order")
    p.add_argument(
        "--spec",
        metavar="FILE",
        help="read the whole job as JSON from FILE ('-' for stdin)",
    )


def _add_run_flags(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument(
        "--verbose",
        action="store_true",
        help="include witnesses, generators and timings",
    )
    p.add_argument(
        "--budget-ms",
        type=int,
        help="wall-clock budget (default: JET_BUDGET_MS or 60000)",
    )
    p.add_argument(
        "--server",
        metavar="URL",
        help="run against a remote service instead of in process",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jet",
        description=(
            "Exact jet-space computations: equations, dimensions, fibers, "
            "components, singular loci, and a claim regression suite."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "compute", help="print the jet equations with their weights"
    )
    _add_ring_flags(p)
    _add_run_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("dim", help="dimension of the jet space")
    _add_ring_flags(p)
    _add_run_flags(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser(
        "member", help="ideal membership of a jet-ring polynomial"
    )
    _add_ring_flags(p)
    _add_run_flags(p)
    p.add_argument("--f", help="test polynomial in the jet variables")
    p.add_argument(
        "--with-square",
        action="store_true",
        help="also decide membership of the square",
    )
    p.set_defaults(func=cmd_member)

    p = sub.add_parser(
        "fiber", help="dimension of the jet fiber over a point"
    )
    _add_ring_flags(p)
    _add_run_flags(p)
    p.add_argument("--point", help="comma-separated coordinates")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser(
        "main-component",
        help="dimension of the closure of jets over smooth points",
    )
    _add_ring_flags(p)
    _add_run_flags(p)
    p.add_argument(
        "--sing",
        action="append",
        metavar="POLY",
        help="equation of the singular locus (repeatable; default: "
        "Jacobian system of the base ideal)",
    )
    p.set_defaults(func=cmd_main_component)

    p = sub.add_parser(
        "sing", help="singular locus of the jet space by the rank criterion"
    )
    _add_ring_flags(p)
    _add_run_flags(p)
    p.set_defaults(func=cmd_sing)

    p = sub.add_parser(
        "examples", help="run the bundled example claim suite"
    )
    p.add_argument(
        "--filter",
        action="append",
        metavar="PREFIX",
        help="only claims whose id starts with PREFIX (repeatable, "
        "comma-separable)",
    )
    p.add_argument(
        "--field",
        default="rational",
        help="coefficient field: 'rational' or 'prime:<p>'",
    )
    _add_run_flags(p)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = ".".join(str(x) for x in first.get("loc", ()))
        msg = first.get("msg", "invalid value")
        print(f"error: {loc}: {msg}" if loc else f"error: {msg}",
              file=sys.stderr)
        return 2
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
