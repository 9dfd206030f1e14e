"""Size caps guarding the exhaustive algorithms.

Every enumeration checks ``order_cap``; subgroup-lattice construction checks the
(smaller) ``lattice_cap``. The default order cap can be overridden with the
``LCGROUPS_ORDER_CAP`` environment variable.
"""
from __future__ import annotations

import contextlib
import contextvars
import os
from dataclasses import dataclass, replace
from typing import Iterator

ORDER_CAP_ENV = "LCGROUPS_ORDER_CAP"
DEFAULT_ORDER_CAP = 5000
DEFAULT_LATTICE_CAP = 256


class CapExceeded(RuntimeError):
    """Raised when a group is too large for a desk-scale exhaustive algorithm."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class Caps:
    order: int = DEFAULT_ORDER_CAP
    lattice: int = DEFAULT_LATTICE_CAP

    def as_dict(self) -> dict[str, int]:
        return {"order": self.order, "lattice": self.lattice}


def _initial_caps() -> Caps:
    raw = os.environ.get(ORDER_CAP_ENV)
    if raw is None:
        return Caps()
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ORDER_CAP_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{ORDER_CAP_ENV} must be positive, got {value}")
    return Caps(order=value)


_CAPS: contextvars.ContextVar[Caps] = contextvars.ContextVar("lcgroups_caps", default=_initial_caps())


def current_caps() -> Caps:
    return _CAPS.get()


@contextlib.contextmanager
def caps(order: int | None = None, lattice: int | None = None) -> Iterator[Caps]:
    """Temporarily override the caps for the current context."""
    new = current_caps()
    if order is not None:
        new = replace(new, order=order)
    if lattice is not None:
        new = replace(new, lattice=lattice)
    token = _CAPS.set(new)
    try:
        yield new
    finally:
        _CAPS.reset(token)
