"""Kernel dispatch.

The compiled module ``_ckernels`` is used when it imports and the input fits
in 64 bits; otherwise the pure-Python twins in ``_pykernels`` run. Setting
``ZDPOSET_PURE_PYTHON=1`` forces the fallback for the whole process.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pykernels

try:
    if os.environ.get("ZDPOSET_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python forced")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_WIDTH = 64


def _pick(size: int):
    if _ckernels is not None and size <= _WIDTH:
        return _ckernels
    return _pykernels


def transitive_closure(down: Sequence[int]) -> list[int]:
    return _pick(len(down)).transitive_closure(down)


def annihilator_masks(down: Sequence[int]) -> list[int]:
    return _pick(len(down)).annihilator_masks(down)


def distance_matrix(adj: Sequence[int]) -> list[list[int]]:
    return _pick(len(adj)).distance_matrix(adj)


def girth(adj: Sequence[int]) -> int:
    return _pick(len(adj)).girth(adj)


def max_clique(adj: Sequence[int]) -> int:
    return _pick(len(adj)).max_clique(adj)


def poset_down_masks(m: int) -> list[tuple[int, ...]]:
    return _pick(m).poset_down_masks(m)
