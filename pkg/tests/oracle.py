"""Independent brute force on plain image tuples; imports nothing from lcgroups.

Composition matches the package: ``comp(a, b)`` applies ``b`` first.
"""
from __future__ import annotations

from math import lcm


def comp(a, b):
    return tuple(a[i] for i in b)


def ident(n):
    return tuple(range(n))


def order(a):
    e, c, k = ident(len(a)), a, 1
    while c != e:
        c, k = comp(c, a), k + 1
    return k


def closure(gens, n=None):
    n = n if n is not None else len(gens[0])
    e = ident(n)
    seen, frontier = {e}, [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = comp(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def powers(x):
    e, out, c = ident(len(x)), [ident(len(x))], x
    while c != e:
        out.append(c)
        c = comp(c, x)
    return out


def lcm_set(G):
    o = {g: order(g) for g in G}
    good = {h: all(lcm(o[h], o[y]) % o[comp(h, y)] == 0 for y in G) for h in G}
    return {x for x in G if all(good[h] for h in powers(x))}


def lcm_p_set(G, p):
    o = {g: order(g) for g in G}
    pel = [g for g in G if _is_p_power(o[g], p)]
    good = {h: all(lcm(o[h], o[y]) % o[comp(h, y)] == 0 for y in pel) for h in pel}
    return {x for x in pel if all(good[h] for h in powers(x))}


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def cp2(G):
    o = {g: order(g) for g in G}
    return all(o[comp(x, y)] <= max(o[x], o[y]) for x in G for y in G if x != y)


def center(G):
    return {z for z in G if all(comp(z, g) == comp(g, z) for g in G)}


def cyclic(n):
    return closure([tuple((i + 1) % n for i in range(n))])


def dihedral8():
    return closure([(1, 2, 3, 0), (0, 3, 2, 1)])


def sym(n):
    if n < 2:
        return {ident(max(n, 1))}
    return closure([tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])])


def images(G):
    """Engine group -> set of image tuples."""
    return {tuple(g.images) for g in G.elements}
