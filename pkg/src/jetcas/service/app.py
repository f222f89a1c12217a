"""HTTP surface: one route per operation, JSON in, JSON out.

Domain errors map onto status codes: malformed input is 400, a point off
the variety (and similar semantic preconditions) is 422, and an exhausted
computation budget is 503.  Every error body carries a stable ``code``.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import (
    BudgetExceededError,
    InputError,
    ParseError,
    PreconditionError,
)
from . import ops
from .schemas import (
    ComponentResponse,
    ComputeResponse,
    DimResponse,
    FiberResponse,
    HealthResponse,
    JobSpec,
    MemberResponse,
    SingResponse,
    SuiteRequest,
    SuiteResponse,
)

app = FastAPI(
    title="jetcas",
    version=__version__,
    description=(
        "Exact computation with jet spaces of affine varieties: jet "
        "equations, dimensions, fibers, components, singular loci, and "
        "the bundled example claim suite."
    ),
)


def _error_payload(code: str, exc: Exception) -> dict:
    detail: dict = {"code": code, "message": str(exc)}
    if isinstance(exc, ParseError):
        detail["column"] = exc.column
    return {"detail": detail}


@app.exception_handler(InputError)
async def _input_error(request: Request, exc: InputError):
    return JSONResponse(
        status_code=400, content=_error_payload("input_error", exc)
    )


@app.exception_handler(PreconditionError)
async def _precondition_error(request: Request, exc: PreconditionError):
    return JSONResponse(
        status_code=422, content=_error_payload("precondition_failed", exc)
    )


@app.exception_handler(BudgetExceededError)
async def _budget_error(request: Request, exc: BudgetExceededError):
    return JSONResponse(
        status_code=503, content=_error_payload("budget_exceeded", exc)
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/compute", response_model=ComputeResponse)
def compute(spec: JobSpec) -> ComputeResponse:
    return ops.compute_op(spec)


@app.post("/dim", response_model=DimResponse, response_model_exclude_none=True)
def dim(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> DimResponse:
    return ops.dim_op(spec, budget_ms, verbose)


@app.post("/member", response_model=MemberResponse,
          response_model_exclude_none=True)
def member(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> MemberResponse:
    return ops.member_op(spec, budget_ms, verbose)


@app.post("/fiber", response_model=FiberResponse,
          response_model_exclude_none=True)
def fiber(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> FiberResponse:
    return ops.fiber_op(spec, budget_ms, verbose)


@app.post("/main-component", response_model=ComponentResponse,
          response_model_exclude_none=True)
def component(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> ComponentResponse:
    return ops.component_op(spec, budget_ms, verbose)


@app.post("/sing", response_model=SingResponse,
          response_model_exclude_none=True)
def sing(
    spec: JobSpec, budget_ms: int | None = None, verbose: bool = False
) -> SingResponse:
    return ops.sing_op(spec, budget_ms, verbose)


@app.post("/examples", response_model=SuiteResponse)
def examples(req: SuiteRequest) -> SuiteResponse:
    return ops.suite_op(req)
