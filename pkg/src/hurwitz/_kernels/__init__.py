"""Kernel selection: the compiled extension when built, pure Python otherwise.

Set HURWITZ_KERNEL=pure or HURWITZ_KERNEL=compiled to force a backend.
Character calls above the compiled 64-bit weight limit are routed to the
pure big-integer path automatically.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _fast
except ImportError:
    _fast = None

_forced = os.environ.get("HURWITZ_KERNEL")
if _forced == "pure":
    _active = pure
elif _forced == "compiled":
    if _fast is None:
        raise ImportError("HURWITZ_KERNEL=compiled but the extension is not built")
    _active = _fast
elif _forced:
    raise ImportError(f"unknown HURWITZ_KERNEL value: {_forced!r}")
else:
    _active = _fast if _fast is not None else pure

BACKEND = "compiled" if _active is _fast else "pure"


def backend() -> str:
    """Name of the active kernel backend."""
    return BACKEND


def character_value(shape: tuple[int, ...], class_parts: tuple[int, ...]) -> int:
    if _active is not pure and sum(shape) > _fast.MAX_WEIGHT:
        return pure.character_value(shape, class_parts)
    return _active.character_value(shape, class_parts)


def count_transposition_factorizations(
    d: int, alphas: tuple[tuple[int, ...], ...], k: int, transitive: bool
) -> int:
    return _active.count_transposition_factorizations(d, alphas, k, transitive)


def clear_memo() -> None:
    pure.clear_memo()
    if _fast is not None:
        _fast.clear_memo()
