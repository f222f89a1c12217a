"""Request and response models for the HTTP service and the CLI.

The job schema is the one canonical input format: the CLI builds it from
flags or reads it from a file, the service accepts it as a request body,
and it round-trips through JSON losslessly.
"""

from __future__ import annotations

import re

from pydantic import BaseModel, ConfigDict, Field, field_validator

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_JET_SUFFIX_RE = re.compile(r"_\d+\Z")


class RingSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    vars: list[str]
    order: str = "grevlex"
    modulus: int | None = Field(default=None, ge=2)

    @field_validator("vars")
    @classmethod
    def _check_vars(cls, names: list[str]) -> list[str]:
        if not names:
            raise ValueError("at least one variable is required")
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name {name!r}")
            if _JET_SUFFIX_RE.search(name):
                raise ValueError(
                    f"variable name {name!r} ends in an underscore-digit "
                    "suffix, which is reserved for jet coefficients"
                )
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)
        return names

    @field_validator("order")
    @classmethod
    def _check_order(cls, order: str) -> str:
        if order not in ("grevlex", "lex"):
            raise ValueError("order must be 'grevlex' or 'lex'")
        return order


class JobSpec(BaseModel):
    """One computation request: a ring, generators, and per-command data."""

    model_config = ConfigDict(extra="forbid")

    ring: RingSpec
    generators: list[str] = Field(default_factory=list)
    m: int | None = Field(default=None, ge=0)
    f: str | None = None
    point: list[int | str] | None = None
    sing: list[str] | None = None
    d: int | None = None
    n: int | None = None
    with_square: bool = False


class ComputeResponse(BaseModel):
    vars: list[str]
    weights: list[int]
    equations: list[str]
    generator_index: list[int]


class DimResponse(BaseModel):
    dim: int
    witness: list[str]
    basis_size: int
    elapsed_ms: float | None = None


class MemberResponse(BaseModel):
    member: bool
    normal_form: str
    square_member: bool | None = None
    square_normal_form: str | None = None


class FiberResponse(BaseModel):
    dim: int
    witness: list[str]
    vars: list[str]
    generators: list[str]
    elapsed_ms: float | None = None


class ComponentResponse(BaseModel):
    dim: int
    witness: list[str]
    generators: list[str]
    elapsed_ms: float | None = None


class SingResponse(BaseModel):
    dim: int
    witness: list[str]
    generators: list[str]
    elapsed_ms: float | None = None


class VerdictRow(BaseModel):
    claim: str
    status: str
    computed: dict
    expected: dict
    notes: str = ""
    flags: list[str] = Field(default_factory=list)


class SuiteRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    filter: list[str] | None = None
    field: str = "rational"
    budget_ms: int | None = Field(default=None, ge=1)


class SuiteResponse(BaseModel):
    rows: list[VerdictRow]
    passed: int
    failed: int
    skipped: int


class HealthResponse(BaseModel):
    status: str
    version: str
