# cython: language_level=3
"""Compiled inner loops over a group's multiplication table.

Mirrors ``_pykernels`` function for function; ``lcgroups.kernels`` picks one.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef cnp.int32_t i32
ctypedef cnp.int64_t i64
ctypedef cnp.uint8_t u8


cdef inline i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


def product_table(const i32[:, ::1] perms, const i64[::1] base, i64 radix,
                  const i64[::1] sorted_keys, const i64[::1] sort_index):
    cdef Py_ssize_t n = perms.shape[0]
    cdef Py_ssize_t nb = base.shape[0]
    cdef Py_ssize_t i, j, k, lo, hi, mid
    cdef i64 key, mult
    out = np.empty((n, n), dtype=np.int32)
    cdef i32[:, ::1] table = out
    with nogil:
        for i in range(n):
            for j in range(n):
                key = 0
                mult = 1
                for k in range(nb):
                    key = key + perms[i, perms[j, base[k]]] * mult
                    mult = mult * radix
                lo = 0
                hi = n - 1
                while lo < hi:
                    mid = (lo + hi) // 2
                    if sorted_keys[mid] < key:
                        lo = mid + 1
                    else:
                        hi = mid
                if sorted_keys[lo] != key:
                    table[i, j] = -1
                else:
                    table[i, j] = <i32>sort_index[lo]
    if (out < 0).any():
        raise ValueError("generator set is not closed under composition")
    return out


def closure(const i32[:, ::1] table, const i32[::1] gens, const i32[::1] start):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t ng = gens.shape[0]
    cdef Py_ssize_t head = 0, tail = 0, s, k
    cdef i32 x, y
    mask_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.empty(n, dtype=np.int32)
    cdef u8[::1] mask = mask_arr
    cdef i32[::1] queue = queue_arr
    with nogil:
        for s in range(start.shape[0]):
            x = start[s]
            if not mask[x]:
                mask[x] = 1
                queue[tail] = x
                tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for k in range(ng):
                y = table[x, gens[k]]
                if not mask[y]:
                    mask[y] = 1
                    queue[tail] = y
                    tail += 1
    return mask_arr


def first_failures(const i32[:, ::1] table, const i64[::1] orders,
                   const u8[::1] hmask, const u8[::1] ymask):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t h, y
    cdef i64 oh, oy, l
    out_arr = np.full(n, -1, dtype=np.int32)
    cdef i32[::1] out = out_arr
    with nogil:
        for h in range(n):
            if not hmask[h]:
                continue
            oh = orders[h]
            for y in range(n):
                if not ymask[y]:
                    continue
                oy = orders[y]
                l = oh // _gcd(oh, oy) * oy
                if l % orders[table[h, y]] != 0:
                    out[h] = <i32>y
                    break
    return out_arr


def cp2_violation(const i32[:, ::1] table, const i64[::1] orders):
    cdef Py_ssize_t n = table.shape[0]
    cdef Py_ssize_t x, y
    cdef i64 ox, oy, m
    cdef Py_ssize_t bx = -1, by = -1
    with nogil:
        for x in range(n):
            ox = orders[x]
            for y in range(n):
                if x == y:
                    continue
                oy = orders[y]
                m = ox if ox > oy else oy
                if orders[table[x, y]] > m:
                    bx = x
                    by = y
                    break
            if bx >= 0:
                break
    return bx, by
