"""HTTP service wrapping the core library, plus its shared job schema."""

from .schemas import JobSpec, RingSpec, SuiteRequest

__all__ = ["JobSpec", "RingSpec", "SuiteRequest"]
