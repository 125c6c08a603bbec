"""Runtime-tunable limits."""

from __future__ import annotations

import os

MAX_SCAN_ENV = "RATINTERP_MAX_SCAN"


def scan_limit(default: int) -> int:
    """Bound for deterministic integer parameter scans.

    The scans terminate well within the default (only finitely many
    parameter values are excluded); the bound is defensive.  The
    environment variable overrides it.
    """
    raw = os.environ.get(MAX_SCAN_ENV)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{MAX_SCAN_ENV} must be positive")
    return value
