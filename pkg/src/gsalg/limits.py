"""Capacity guards for computations that can blow up exponentially."""

from __future__ import annotations

import os

__all__ = ["CapacityError", "memory_limit_bytes", "require_capacity"]

_ENV_VAR = "GSALG_MEMORY_LIMIT_MB"
_DEFAULT_MB = 512


class CapacityError(RuntimeError):
    """Requested computation exceeds the configured size budget."""


def memory_limit_bytes() -> int:
    try:
        mb = int(os.environ.get(_ENV_VAR, _DEFAULT_MB))
    except ValueError:
        mb = _DEFAULT_MB
    return mb << 20


def require_capacity(nbytes: int, what: str):
    limit = memory_limit_bytes()
    if nbytes > limit:
        raise CapacityError(
            f"{what} needs about {nbytes >> 20} MiB, over the "
            f"{limit >> 20} MiB budget ({_ENV_VAR} raises it)"
        )
