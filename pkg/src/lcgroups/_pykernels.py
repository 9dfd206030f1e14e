"""numpy implementations of the table kernels (used when the extension is absent)."""
from __future__ import annotations

import numpy as np

_CHUNK = 1 << 22


def product_table(perms, base, radix, sorted_keys, sort_index):
    n = perms.shape[0]
    weights = radix ** np.arange(len(base), dtype=np.int64)
    based = perms[:, base]  # images of the base points, one row per element
    table = np.empty((n, n), dtype=np.int32)
    rows = max(1, _CHUNK // max(1, n * len(base)))
    for lo in range(0, n, rows):
        block = perms[lo:lo + rows]
        # block[i, based[j, k]] = (a_i o a_j)(base_k)
        keys = (block[:, based].astype(np.int64) * weights).sum(axis=2)
        pos = np.searchsorted(sorted_keys, keys)
        pos = np.minimum(pos, n - 1)
        if not np.array_equal(sorted_keys[pos], keys):
            raise ValueError("generator set is not closed under composition")
        table[lo:lo + rows] = sort_index[pos]
    return table


def closure(table, gens, start):
    n = table.shape[0]
    mask = np.zeros(n, dtype=np.uint8)
    frontier = np.unique(np.asarray(start, dtype=np.int64))
    mask[frontier] = 1
    gens = np.asarray(gens, dtype=np.int64)
    if len(gens) == 0:
        return mask
    while frontier.size:
        nxt = np.unique(table[np.ix_(frontier, gens)].ravel())
        nxt = nxt[mask[nxt] == 0]
        mask[nxt] = 1
        frontier = nxt
    return mask


def first_failures(table, orders, hmask, ymask):
    n = table.shape[0]
    out = np.full(n, -1, dtype=np.int32)
    hs = np.flatnonzero(hmask)
    ys = np.flatnonzero(ymask)
    if hs.size == 0 or ys.size == 0:
        return out
    oy = orders[ys]
    for lo in range(0, hs.size, max(1, _CHUNK // ys.size)):
        h = hs[lo:lo + max(1, _CHUNK // ys.size)]
        oh = orders[h][:, None]
        lcm = np.lcm(oh, oy[None, :])
        bad = lcm % orders[table[np.ix_(h, ys)]] != 0
        has = bad.any(axis=1)
        first = bad.argmax(axis=1)
        out[h[has]] = ys[first[has]]
    return out


def cp2_violation(table, orders):
    n = table.shape[0]
    rows = max(1, _CHUNK // max(1, n))
    for lo in range(0, n, rows):
        x = np.arange(lo, min(n, lo + rows))
        bound = np.maximum(orders[x][:, None], orders[None, :])
        bad = orders[table[x]] > bound
        bad[np.arange(len(x)), x] = False
        if bad.any():
            flat = int(np.flatnonzero(bad.ravel())[0])
            return int(x[flat // n]), flat % n
    return -1, -1
