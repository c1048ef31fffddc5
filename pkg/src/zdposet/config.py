"""Brute-force oracle size limits.

``ZDPOSE_ORACLE_CAP`` overrides both limits when set to a positive integer.
"""

from __future__ import annotations

import os

DEFAULT_IDEAL_CAP = 16
DEFAULT_GRAPH_CAP = 12
ENV_VAR = "ZDPOSE_ORACLE_CAP"


def _override() -> int | None:
    raw = os.environ.get(ENV_VAR, "").strip()
    if not raw:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


def ideal_cap() -> int:
    """Largest poset size accepted by ideal enumeration and brute-force primes."""
    value = _override()
    return DEFAULT_IDEAL_CAP if value is None else value


def graph_cap() -> int:
    """Largest vertex count accepted by the brute-force graph oracles."""
    value = _override()
    return DEFAULT_GRAPH_CAP if value is None else value
