"""Backend selection for the multiplication-table kernels.

The compiled extension ``lcgroups._kernels`` is preferred; set
``LCGROUPS_PURE=1`` to force the numpy fallback. Both backends share the
same signatures, and :func:`product_table` wraps the base-point hashing they
rely on.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels

if os.environ.get("LCGROUPS_PURE"):
    _backend = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as _backend  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _backend = _pykernels
        BACKEND = "python"

_KEY_LIMIT = 1 << 62


def backends() -> dict[str, object]:
    """Every importable backend by name (the fallback is always present)."""
    found: dict[str, object] = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        found["cython"] = _kernels
    return found


def _base_points(perms: np.ndarray) -> list[int] | None:
    """Points whose images pin down every element, or None if keys would overflow."""
    n, degree = perms.shape
    radix = max(degree, 2)
    keys = np.zeros(n, dtype=np.int64)
    base: list[int] = []
    distinct = 1
    mult = 1
    for point in range(degree):
        if distinct == n:
            break
        trial = keys + perms[:, point].astype(np.int64) * mult
        count = len(np.unique(trial))
        if count > distinct:
            if mult * radix >= _KEY_LIMIT:
                return None
            base.append(point)
            keys = trial
            distinct = count
            mult *= radix
    return base if distinct == n else None


def product_table(perms: np.ndarray, backend=None) -> np.ndarray:
    """``table[i, j]`` = index of ``perms[i] o perms[j]`` (right factor applied first)."""
    impl = backend if backend is not None else _backend
    perms = np.ascontiguousarray(perms, dtype=np.int32)
    n, degree = perms.shape
    base = _base_points(perms)
    if base is None:
        return _table_by_dict(perms)
    radix = max(degree, 2)
    weights = radix ** np.arange(len(base), dtype=np.int64)
    keys = (perms[:, base].astype(np.int64) * weights).sum(axis=1)
    order = np.argsort(keys, kind="stable").astype(np.int64)
    return impl.product_table(perms, np.asarray(base, dtype=np.int64), radix,
                              np.ascontiguousarray(keys[order]), order)


def _table_by_dict(perms: np.ndarray) -> np.ndarray:
    index = {row.tobytes(): i for i, row in enumerate(perms)}
    n = perms.shape[0]
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        composed = perms[i][perms]
        for j in range(n):
            table[i, j] = index[composed[j].tobytes()]
    return table


def closure(table: np.ndarray, gens, start, backend=None) -> np.ndarray:
    impl = backend if backend is not None else _backend
    return impl.closure(table, np.ascontiguousarray(gens, dtype=np.int32),
                        np.ascontiguousarray(start, dtype=np.int32))


def first_failures(table, orders, hmask, ymask, backend=None) -> np.ndarray:
    impl = backend if backend is not None else _backend
    return impl.first_failures(table, np.ascontiguousarray(orders, dtype=np.int64),
                               np.ascontiguousarray(hmask, dtype=np.uint8),
                               np.ascontiguousarray(ymask, dtype=np.uint8))


def cp2_violation(table, orders, backend=None) -> tuple[int, int]:
    impl = backend if backend is not None else _backend
    x, y = impl.cp2_violation(table, np.ascontiguousarray(orders, dtype=np.int64))
    return int(x), int(y)
