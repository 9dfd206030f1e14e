"""Permutations and exhaustively enumerated permutation groups.

Composition convention: ``a * b`` (and :func:`compose`) applies ``b`` first,
so ``(a * b)(i) == a(b(i))``. Every other module inherits this.

Group elements are addressed by their index in ``FiniteGroup.elements``;
subgroups are stored as explicit sets of those indices.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from . import kernels
from .config import CapExceeded, current_caps


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` given by its image sequence."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if not images:
            raise ValueError("permutation must act on at least one point")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on {len(images)} points: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from disjoint 0-based cycles; points not mentioned are fixed."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for pos, point in enumerate(cycle):
                if not 0 <= point < degree:
                    raise ValueError(f"point {point} outside 0..{degree - 1}")
                if point in seen:
                    raise ValueError(f"point {point} repeated in cycles")
                seen.add(point)
                images[point] = cycle[(pos + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        k %= self.order()
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                seen[j] = True
                cycle.append(j)
                j = self.images[j]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Permutation({body or '()'}, degree={self.degree})"

    def cycle_string(self, one_based: bool = True) -> str:
        shift = 1 if one_based else 0
        return "".join("(" + " ".join(str(p + shift) for p in c) + ")" for c in self.cycles()) or "()"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a o b``: apply ``b``, then ``a``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    ai = a.images
    return Permutation._trusted(tuple(ai[i] for i in b.images))


def element_order(g: Permutation) -> int:
    return g.order()


Element = Union[Permutation, int]


class FiniteGroup:
    """A permutation group with every element enumerated.

    ``elements`` is in breadth-first order by word length in the generators
    (ties broken by generator index), starting from the identity, so all
    indices are deterministic given the generator list.
    """

    def __init__(self, generators: Sequence[Permutation], elements: Sequence[Permutation],
                 name: str | None = None):
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.degree = self.elements[0].degree
        self.name = name
        self._index = {g: i for i, g in enumerate(self.elements)}
        # derived data (lattice, LCM tables, ...) keyed by the computing module
        self.cache: dict = {}

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"FiniteGroup({label}order={self.order}, degree={self.degree})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, g: object) -> bool:
        return g in self._index

    def index(self, g: Element) -> int:
        if isinstance(g, Permutation):
            try:
                return self._index[g]
            except KeyError:
                raise ValueError(f"{g!r} is not an element of {self!r}") from None
        i = int(g)
        if not 0 <= i < self.order:
            raise ValueError(f"element index {i} out of range for {self!r}")
        return i

    @cached_property
    def identity(self) -> Permutation:
        return self.elements[0]

    @cached_property
    def gen_indices(self) -> tuple[int, ...]:
        return tuple(self._index[g] for g in self.generators)

    @cached_property
    def perm_array(self) -> np.ndarray:
        return np.array([g.images for g in self.elements], dtype=np.int32)

    @cached_property
    def table(self) -> np.ndarray:
        """``table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        t = kernels.product_table(self.perm_array)
        t.setflags(write=False)
        return t

    @cached_property
    def orders(self) -> np.ndarray:
        o = np.array([g.order() for g in self.elements], dtype=np.int64)
        o.setflags(write=False)
        return o

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == 0, axis=1).astype(np.int64)
        inv.setflags(write=False)
        return inv

    @cached_property
    def exponent(self) -> int:
        return math.lcm(1, *(int(o) for o in set(self.orders.tolist())))

    @cached_property
    def is_abelian(self) -> bool:
        g = self.gen_indices
        t = self.table
        return all(t[a, b] == t[b, a] for a in g for b in g)

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, k: int) -> int:
        return self._index[self.elements[i] ** k]

    def cyclic_members(self, i: int) -> list[int]:
        """Indices of ``<x>`` for ``x = elements[i]``, in power order."""
        out = [0]
        cur = i
        while cur != 0:
            out.append(cur)
            cur = int(self.table[cur, i])
        return out

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, frozenset(range(self.order)), self.gen_indices)

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, frozenset({0}), ())


@dataclass(frozen=True, eq=False)
class Subgroup:
    """An explicit member set inside ``parent`` together with generators for it."""

    parent: FiniteGroup
    members: frozenset[int]
    gens: tuple[int, ...]

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, of {self.parent!r})"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: object) -> bool:
        if isinstance(g, Permutation):
            return g in self.parent and self.parent.index(g) in self.members
        return g in self.members

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Subgroup") -> bool:
        return self.members < other.members

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def is_trivial(self) -> bool:
        return len(self.members) == 1

    @cached_property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def elements(self) -> tuple[Permutation, ...]:
        return tuple(self.parent.elements[i] for i in self.sorted_members)

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(self.parent.elements[i] for i in self.gens)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        m.setflags(write=False)
        return m

    @cached_property
    def exponent(self) -> int:
        return math.lcm(1, *(int(self.parent.orders[i]) for i in self.members))

    @cached_property
    def as_group(self) -> FiniteGroup:
        """This subgroup as a standalone group on the parent's points."""
        gens = self.generators or (self.parent.identity,)
        return enumerate_group(gens)

    def from_group_indices(self, indices: Iterable[int]) -> frozenset[int]:
        """Translate indices of ``as_group`` back to parent indices."""
        sub = self.as_group
        return frozenset(self.parent.index(sub.elements[i]) for i in indices)


def enumerate_group(generators: Sequence[Permutation], cap: int | None = None,
                    name: str | None = None) -> FiniteGroup:
    """Breadth-first closure of ``generators`` under right multiplication."""
    generators = list(generators)
    if not generators:
        raise ValueError("need at least one generator")
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"degree mismatch: {g.degree} vs {degree}")
    if cap is None:
        cap = current_caps().order
    identity = tuple(range(degree))
    gen_images = [g.images for g in generators]
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        cur = queue.popleft()
        for s in gen_images:
            nxt = tuple(cur[i] for i in s)
            if nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                if len(order) > cap:
                    raise CapExceeded("group enumeration", len(order), cap)
                queue.append(nxt)
    return FiniteGroup(generators, [Permutation._trusted(p) for p in order], name=name)


def _indices(G: FiniteGroup, seed: Iterable[Element]) -> list[int]:
    return [G.index(s) for s in seed]


def _closure_mask(G: FiniteGroup, gens: Sequence[int], start: Sequence[int] = (0,)) -> np.ndarray:
    return kernels.closure(G.table, list(gens), list(start))


def subgroup_from_indices(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing the given element indices."""
    gens: list[int] = []
    mask = np.zeros(G.order, dtype=np.uint8)
    mask[0] = 1
    for x in sorted(set(seed)):
        if mask[x]:
            continue
        gens.append(x)
        mask = _closure_mask(G, gens, np.flatnonzero(mask))
    return Subgroup(G, frozenset(np.flatnonzero(mask).tolist()), tuple(gens))


def subgroup_generated(G: FiniteGroup, seed: Iterable[Element]) -> Subgroup:
    return subgroup_from_indices(G, _indices(G, seed))


def join(G: FiniteGroup, A: Subgroup, extra: Iterable[int]) -> Subgroup:
    """``<A, extra>``, reusing ``A``'s members as the starting set."""
    gens = list(A.gens)
    mask = A.mask.astype(np.uint8)
    for x in extra:
        if mask[x]:
            continue
        gens.append(x)
        mask = _closure_mask(G, gens, np.flatnonzero(mask))
    return Subgroup(G, frozenset(np.flatnonzero(mask).tolist()), tuple(gens))


def conjugate_indices(G: FiniteGroup, members: Iterable[int], g: int) -> np.ndarray:
    """``{g h g^-1 : h in members}`` as an index array."""
    m = np.fromiter(members, dtype=np.int64)
    return G.table[G.table[g, m], G.inverses[g]]


def normal_closure(G: FiniteGroup, seed: Iterable[Element], within: Subgroup | None = None) -> Subgroup:
    """``<seed^G>``, the smallest normal subgroup containing ``seed``.

    With ``within``, close under conjugation by that subgroup only.
    """
    H = subgroup_generated(G, seed)
    conjugators = G.gen_indices if within is None else within.gens
    changed = True
    while changed:
        changed = False
        for g in conjugators:
            new = [int(c) for c in conjugate_indices(G, H.gens, g) if int(c) not in H.members]
            if new:
                H = join(G, H, new)
                changed = True
    return H


def centralizer(G: FiniteGroup, S: Iterable[Element]) -> Subgroup:
    idx = _indices(G, S)
    t = G.table
    ok = np.ones(G.order, dtype=bool)
    for s in idx:
        ok &= t[:, s] == t[s, :]
    return subgroup_from_indices(G, np.flatnonzero(ok).tolist())


def center(G: FiniteGroup) -> Subgroup:
    return centralizer(G, G.gen_indices)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    t = G.table
    gens = np.asarray(H.gens, dtype=np.int64)
    mask = H.mask
    keep = [g for g in range(G.order)
            if mask[t[t[g, gens], G.inverses[g]]].all()]
    return subgroup_from_indices(G, keep)


def is_normal(G: FiniteGroup, H: Subgroup) -> bool:
    """True iff ``H`` is normalized by every generator of ``G``."""
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not H.gens:
        return True
    mask = H.mask
    return all(mask[conjugate_indices(G, H.gens, g)].all() for g in G.gen_indices)


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return subgroup_from_indices(A.parent, A.members & B.members)


def is_subgroup_set(G: FiniteGroup, members: Iterable[int]) -> bool:
    """Whether a set of indices is closed under multiplication (finite, so a subgroup)."""
    m = np.fromiter(members, dtype=np.int64)
    if m.size == 0:
        return False
    mask = np.zeros(G.order, dtype=bool)
    mask[m] = True
    return bool(mask[G.table[np.ix_(m, m)]].all())
