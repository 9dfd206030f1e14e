"""Quotients, central and derived series, Sylow/Fitting subgroups, Omega/Mho,
regularity and Frobenius tests, and subgroup lattices."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .config import CapExceeded, current_caps
from .perm import (
    Element,
    FiniteGroup,
    Permutation,
    Subgroup,
    center,
    conjugate_indices,
    enumerate_group,
    is_normal,
    join,
    normal_closure,
    normalizer,
    subgroup_from_indices,
)


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def big_omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    count = 0
    for p in prime_factors(n):
        while n % p == 0:
            n //= p
            count += 1
    return count


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_power_of(n: int, p: int) -> bool:
    return p_part(n, p) == n


def p_group_prime(G: FiniteGroup) -> int | None:
    """The prime ``p`` if ``|G|`` is a nontrivial power of ``p``, else None."""
    primes = prime_factors(G.order)
    return primes[0] if len(primes) == 1 else None


def p_elements(G: FiniteGroup, p: int) -> np.ndarray:
    """Boolean mask of elements whose order is a power of ``p``."""
    o = G.orders
    return np.array([is_power_of(int(k), p) for k in o.tolist()], dtype=bool)


GroupLike = Union[FiniteGroup, Subgroup]


def _ambient(X: GroupLike) -> tuple[FiniteGroup, frozenset[int]]:
    if isinstance(X, Subgroup):
        return X.parent, X.members
    return X, frozenset(range(X.order))


# -- quotients --------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Epimorphism:
    """``source -> source/kernel`` realized by the action on left cosets."""

    source: FiniteGroup
    kernel: Subgroup
    image: FiniteGroup
    forward_index: tuple[int, ...]

    def forward(self, g: Element) -> Permutation:
        return self.image.elements[self.forward_index[self.source.index(g)]]

    def push(self, H: Subgroup) -> Subgroup:
        """Image of a subgroup of the source."""
        fwd = self.forward_index
        return Subgroup(self.image, frozenset(fwd[i] for i in H.members),
                        tuple(dict.fromkeys(fwd[i] for i in H.gens if fwd[i] != 0)))

    def pullback(self, K: Subgroup) -> Subgroup:
        """Full preimage of a subgroup of the image."""
        if K.parent is not self.image:
            raise ValueError("subgroup does not live in this quotient")
        fwd = self.forward_index
        members = frozenset(i for i in range(self.source.order) if fwd[i] in K.members)
        reps = {}
        for i in range(self.source.order):
            if fwd[i] in K.gens and fwd[i] not in reps:
                reps[fwd[i]] = i
        gens = tuple(self.kernel.gens) + tuple(reps[k] for k in K.gens)
        return Subgroup(self.source, members, gens)


def quotient(G: FiniteGroup, N: Subgroup) -> Epimorphism:
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not is_normal(G, N):
        raise ValueError("cannot form a quotient by a non-normal subgroup")
    key = ("quotient", N.members)
    if key in G.cache:
        return G.cache[key]
    t = G.table
    m = np.fromiter(N.sorted_members, dtype=np.int64)
    label = t[:, m].min(axis=1)
    reps, coset_of = np.unique(label, return_inverse=True)
    action = coset_of[t[:, reps]]  # action[g, c] = coset of g * rep_c
    gens = [Permutation(action[g].tolist()) for g in G.gen_indices]
    image = enumerate_group(gens)
    lookup = image._index
    fwd = tuple(lookup[Permutation._trusted(tuple(row))] for row in action.tolist())
    if image.order * N.order != G.order:
        raise AssertionError("coset action is not faithful on G/N")
    epi = Epimorphism(G, N, image, fwd)
    G.cache[key] = epi
    return epi


# -- series -----------------------------------------------------------------------

@dataclass(frozen=True)
class CentralSeries:
    terms: tuple[Subgroup, ...]

    @property
    def reaches_group(self) -> bool:
        return self.terms[-1].order == self.terms[-1].parent.order

    @property
    def nilpotency_class(self) -> int | None:
        return len(self.terms) - 1 if self.reaches_group else None


def upper_central_series(G: FiniteGroup) -> CentralSeries:
    key = "upper_central_series"
    if key not in G.cache:
        terms = [G.trivial]
        while True:
            q = quotient(G, terms[-1])
            nxt = q.pullback(center(q.image))
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        G.cache[key] = CentralSeries(tuple(terms))
    return G.cache[key]


def upper_central_term(G: FiniteGroup, i: int) -> Subgroup:
    """``Z_i(G)``; stays at the hypercenter once the series stabilizes."""
    terms = upper_central_series(G).terms
    return terms[min(i, len(terms) - 1)]


def nilpotency_class(G: FiniteGroup) -> int | None:
    return upper_central_series(G).nilpotency_class


def is_nilpotent(G: FiniteGroup) -> bool:
    return upper_central_series(G).reaches_group


def commutator(G: FiniteGroup, a: int, b: int) -> int:
    """Index of ``a^-1 b^-1 a b``."""
    t, inv = G.table, G.inverses
    return int(t[t[inv[a], inv[b]], t[a, b]])


def derived_subgroup(G: FiniteGroup, H: Subgroup | None = None) -> Subgroup:
    """``[H, H]`` (default ``H = G``) as a subgroup of ``G``."""
    H = G.whole if H is None else H
    comms = {commutator(G, a, b) for a in H.gens for b in H.gens}
    return normal_closure(G, comms, within=H)


def derived_series(G: FiniteGroup) -> list[Subgroup]:
    series = [G.whole]
    while True:
        nxt = derived_subgroup(G, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(G: FiniteGroup) -> bool:
    return derived_series(G)[-1].is_trivial


def prime_order_normal_subgroup(G: FiniteGroup, inside: Subgroup | None = None) -> Subgroup | None:
    """First subgroup of prime order (in index order) normal in ``G``, optionally inside ``inside``."""
    seen: set[frozenset[int]] = set()
    candidates = range(G.order) if inside is None else inside.sorted_members
    for x in candidates:
        o = int(G.orders[x])
        if big_omega(o) != 1:
            continue
        C = Subgroup(G, frozenset(G.cyclic_members(x)), (x,))
        if C.members in seen:
            continue
        seen.add(C.members)
        if is_normal(G, C):
            return C
    return None


def is_supersolvable(G: FiniteGroup) -> bool:
    """Recursion on a normal subgroup of prime order.

    Quotients of supersolvable groups are supersolvable, so the first
    prime-order normal subgroup is as good as any other.
    """
    while G.order > 1:
        N = prime_order_normal_subgroup(G)
        if N is None:
            return False
        G = quotient(G, N).image
    return True


# -- Sylow and Fitting ------------------------------------------------------------

def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    target = p_part(G.order, p)
    key = ("sylow", p)
    if key in G.cache:
        return G.cache[key]
    pel = p_elements(G, p)
    if target == 1:
        P = G.trivial
    else:
        orders = np.where(pel, G.orders, 0)
        start = int(np.argmax(orders))
        P = subgroup_from_indices(G, [start])
        while P.order < target:
            N = normalizer(G, P)
            extra = next(g for g in N.sorted_members if pel[g] and g not in P.members)
            P = join(G, P, [extra])
    G.cache[key] = P
    return P


def conjugates(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    """Distinct conjugates of ``H``, in order of first conjugator index."""
    out: dict[frozenset[int], Subgroup] = {}
    for g in range(G.order):
        members = frozenset(conjugate_indices(G, H.members, g).tolist())
        if members not in out:
            gens = tuple(int(c) for c in conjugate_indices(G, H.gens, g)) if H.gens else ()
            out[members] = Subgroup(G, members, gens)
    return list(out.values())


def p_core(G: FiniteGroup, p: int) -> Subgroup:
    """``O_p(G)``: intersection of the conjugates of a Sylow p-subgroup."""
    members = sylow_subgroup(G, p).members
    for C in conjugates(G, sylow_subgroup(G, p)):
        members = members & C.members
    return subgroup_from_indices(G, members)


def fitting_subgroup(G: FiniteGroup) -> Subgroup:
    key = "fitting"
    if key not in G.cache:
        seed: set[int] = set()
        for p in prime_factors(G.order):
            seed |= p_core(G, p).members
        G.cache[key] = subgroup_from_indices(G, seed)
    return G.cache[key]


# -- Omega and Mho ----------------------------------------------------------------

def omega(X: GroupLike, p: int, n: int) -> tuple[frozenset[int], Subgroup]:
    """``({x : x^(p^n) = 1}, <that set>)`` inside ``X``; indices are in the ambient group."""
    if n < 0:
        raise ValueError("n must be non-negative")
    G, members = _ambient(X)
    bound = p ** n
    raw = frozenset(x for x in members if bound % int(G.orders[x]) == 0)
    return raw, subgroup_from_indices(G, raw)


def power_index(G: FiniteGroup, x: int, k: int) -> int:
    return G.index(G.elements[x] ** k)


def mho(X: GroupLike, p: int, n: int) -> Subgroup:
    """Subgroup generated by all ``p^n``-th powers of elements of ``X``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    G, members = _ambient(X)
    k = p ** n
    return subgroup_from_indices(G, {power_index(G, x, k) for x in members})


# -- regularity and Frobenius ----------------------------------------------------

def regularity_witness(G: FiniteGroup, p: int) -> tuple[int, int] | None:
    """First pair ``(x, y)`` with ``(xy)^p`` not in ``x^p y^p mho_1(<x,y>')``, or None."""
    if G.order > 1 and p_group_prime(G) != p:
        raise ValueError(f"order {G.order} is not a power of {p}")
    t, inv = G.table, G.inverses
    powp = np.array([power_index(G, x, p) for x in range(G.order)], dtype=np.int64)
    mho_cache: dict[frozenset[int], frozenset[int]] = {}
    for x in range(G.order):
        for y in range(G.order):
            if t[x, y] == t[y, x]:
                continue
            d = int(t[inv[t[powp[x], powp[y]]], powp[t[x, y]]])
            if d == 0:
                continue
            H = subgroup_from_indices(G, [x, y])
            if H.members not in mho_cache:
                mho_cache[H.members] = mho(derived_subgroup(G, H), p, 1).members
            if d not in mho_cache[H.members]:
                return x, y
    return None


def is_regular_p_group(G: FiniteGroup, p: int) -> bool:
    return regularity_witness(G, p) is None


def frobenius_complement(G: FiniteGroup, K: Subgroup) -> Subgroup | None:
    """A complement to ``K`` acting fixed-point-freely on it, if one exists."""
    if not is_normal(G, K):
        raise ValueError("kernel candidate is not normal")
    if K.is_trivial or K.order == G.order:
        return None
    m = G.order // K.order
    if math.gcd(m, K.order) != 1:
        return None
    primes = prime_factors(m)
    if len(primes) == 1:
        candidates = [sylow_subgroup(G, primes[0])]
    else:
        candidates = [S for S in all_subgroups(G) if S.order == m]
    t = G.table
    kern = np.array([k for k in K.sorted_members if k != 0], dtype=np.int64)
    for Q in candidates:
        if Q.members & K.members != {0}:
            continue
        if all((t[q, kern] != t[kern, q]).all() for q in Q.sorted_members if q != 0):
            return Q
    return None


def is_frobenius_with_kernel(G: FiniteGroup, K: Subgroup) -> bool:
    return frobenius_complement(G, K) is not None


# -- subgroup lattice -------------------------------------------------------------

def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    out: dict[frozenset[int], Subgroup] = {}
    for x in range(G.order):
        members = frozenset(G.cyclic_members(x))
        if members not in out:
            out[members] = Subgroup(G, members, (x,) if x else ())
    return list(out.values())


def _lattice_key(S: Subgroup) -> tuple[int, tuple[int, ...]]:
    return S.order, S.sorted_members


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, built by joining cyclic subgroups onto known subgroups."""
    cap = current_caps().lattice
    if G.order > cap:
        raise CapExceeded("subgroup lattice", G.order, cap)
    if "lattice" in G.cache:
        return G.cache["lattice"]
    cyclics = cyclic_subgroups(G)
    found: dict[frozenset[int], Subgroup] = {C.members: C for C in cyclics}
    work = list(found.values())
    i = 0
    while i < len(work):
        S = work[i]
        i += 1
        for C in cyclics:
            if C.members <= S.members:
                continue
            J = join(G, S, C.gens)
            if J.members not in found:
                found[J.members] = J
                work.append(J)
    lattice = sorted(found.values(), key=_lattice_key)
    G.cache["lattice"] = lattice
    return lattice


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [S for S in all_subgroups(G) if is_normal(G, S)]


def maximal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    proper = [S for S in all_subgroups(G) if S.order < G.order]
    return [S for S in proper
            if not any(S.order < T.order and S.members < T.members for T in proper)]


def subgroups_of(G: FiniteGroup, H: Subgroup) -> list[Subgroup]:
    """Lattice members contained in ``H``."""
    return [S for S in all_subgroups(G) if S.members <= H.members]


def is_normal_in(G: FiniteGroup, N: Subgroup, H: Subgroup) -> bool:
    """Whether ``N`` is normalized by ``H`` (both subgroups of ``G``)."""
    if not N.gens:
        return True
    mask = N.mask
    return all(mask[conjugate_indices(G, N.gens, h)].all() for h in H.gens)
