"""Instance size caps for the exponential searches."""

from __future__ import annotations

import os

ENV_VAR = "CONVEXKIT_MAX_N"


class SizeCapError(ValueError):
    """The instance is larger than the configured cap for an exact search."""


def cap(default: int) -> int:
    override = os.environ.get(ENV_VAR)
    if override:
        return int(override)
    return default


def check_size(n: int, default: int, what: str) -> None:
    limit = cap(default)
    if n > limit:
        raise SizeCapError(f"{what}: n={n} exceeds cap {limit} (set {ENV_VAR} to override)")
