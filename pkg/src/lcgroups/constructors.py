"""Named group families, direct and wreath products, and the group-spec language.

Grammar (whitespace-insensitive)::

    expr := atom | prod(expr, expr)
    atom := Cyc(n) | Dih(n) | Dic(n) | Sym(n) | Alt(n) | ElemAb(p,k)
          | Heis(p) | Wr(p) | file:<path>

``Dih(n)`` takes the group order (``Dih(8)`` is the dihedral group of order 8)
and ``Dic(n)`` has order ``4n`` (``Dic(2)`` is the quaternion group).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .config import CapExceeded, current_caps
from .perm import FiniteGroup, Permutation, enumerate_group


class GroupSpecError(ValueError):
    """Syntax or validation problem in a group-spec expression."""

    def __init__(self, message: str, offset: int | None = None):
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")
        self.offset = offset


class InvalidTable(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


# -- spec syntax tree ---------------------------------------------------------

ARITY = {"Cyc": 1, "Dih": 1, "Dic": 1, "Sym": 1, "Alt": 1, "ElemAb": 2, "Heis": 1, "Wr": 1}


@dataclass(frozen=True)
class Atom:
    family: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class FileAtom:
    path: str

    def __str__(self) -> str:
        return f"file:{self.path}"


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"

    def __str__(self) -> str:
        return f"prod({self.left},{self.right})"


Node = Union[Atom, FileAtom, Product]


@dataclass(frozen=True)
class GroupSpec:
    root: Node

    @property
    def expression(self) -> str:
        """Canonical text; parsing it again gives an equal spec."""
        return str(self.root)

    def __str__(self) -> str:
        return self.expression


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _expect(self, ch: str) -> None:
        self._ws()
        if self.pos >= len(self.text):
            raise GroupSpecError(f"expected {ch!r}, got end of input", self.pos)
        if self.text[self.pos] != ch:
            raise GroupSpecError(f"expected {ch!r}, got {self.text[self.pos]!r}", self.pos)
        self.pos += 1

    def _int(self) -> int:
        self._ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise GroupSpecError("expected integer", start)
        return int(self.text[start:self.pos])

    def expr(self) -> Node:
        self._ws()
        start = self.pos
        if start >= len(self.text):
            raise GroupSpecError("expected group expression, got end of input", start)
        if self.text.startswith("file:", start):
            self.pos += len("file:")
            end = self.pos
            while end < len(self.text) and self.text[end] not in ",)":
                end += 1
            path = self.text[self.pos:end].strip()
            if not path:
                raise GroupSpecError("empty file path", self.pos)
            self.pos = end
            return FileAtom(path)
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        name = self.text[start:self.pos]
        if not name:
            raise GroupSpecError(f"expected group name, got {self.text[start]!r}", start)
        if name != "prod" and name not in ARITY:
            raise GroupSpecError(f"unknown group family {name!r}", start)
        self._expect("(")
        if name == "prod":
            left = self.expr()
            self._expect(",")
            right = self.expr()
            self._expect(")")
            return Product(left, right)
        params = [self._int()]
        while len(params) < ARITY[name]:
            self._expect(",")
            params.append(self._int())
        self._expect(")")
        return Atom(name, tuple(params))

    def parse(self) -> GroupSpec:
        root = self.expr()
        self._ws()
        if self.pos != len(self.text):
            raise GroupSpecError(f"unexpected trailing text {self.text[self.pos:]!r}", self.pos)
        return GroupSpec(root)


def parse_group_spec(text: str) -> GroupSpec:
    return _Parser(text).parse()


# -- Cayley tables --------------------------------------------------------------

@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table: ``table[i][j]`` is the index of ``i * j``."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(tuple(int(v) for v in row) for row in self.table))
        validate_table(self)

    @property
    def order(self) -> int:
        return len(self.table)

    @classmethod
    def from_function(cls, n: int, mul) -> "CayleyTable":
        return cls(tuple(tuple(mul(i, j) for j in range(n)) for i in range(n)))


def validate_table(T: CayleyTable) -> None:
    n = len(T.table)
    if n == 0:
        raise InvalidTable("empty table")
    t = np.array(T.table, dtype=np.int64)
    if t.shape != (n, n):
        raise InvalidTable("table is not square")
    full = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(t[i]), full):
            raise InvalidTable(f"row {i} is not a permutation")
        if not np.array_equal(np.sort(t[:, i]), full):
            raise InvalidTable(f"column {i} is not a permutation")
    e = T.identity
    if not (0 <= e < n and np.array_equal(t[e], full) and np.array_equal(t[:, e], full)):
        raise InvalidTable(f"{e} is not a two-sided identity")
    lhs = t[t]          # (ab)c
    rhs = t[:, t]       # a(bc)
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        a, b, c = bad[0]
        raise InvalidTable(f"not associative at ({a}, {b}, {c})")


def regular_representation(T: CayleyTable, name: str | None = None) -> FiniteGroup:
    """Left-multiplication action of the table's group on its ``n`` elements."""
    n = T.order
    if n > current_caps().order:
        raise CapExceeded("regular representation", n, current_caps().order)
    perms = [Permutation(T.table[g]) for g in range(n)]
    if n == 1:
        return enumerate_group(perms, name=name)
    gens: list[int] = []
    reached = {T.identity}
    for g in range(n):
        if g in reached:
            continue
        gens.append(g)
        frontier = list(reached)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = T.table[x][s]
                    if y not in reached:
                        reached.add(y)
                        nxt.append(y)
            frontier = nxt
    G = enumerate_group([perms[g] for g in gens], name=name)
    assert G.order == n
    return G


# -- named families -------------------------------------------------------------

def _cycle(degree: int, points: Sequence[int]) -> Permutation:
    return Permutation.from_cycles(degree, [tuple(points)] if len(points) > 1 else [])


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"Cyc needs n >= 1, got {n}")
    return enumerate_group([_cycle(n, range(n))], name=f"Cyc({n})")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order; generators are the rotation then a reflection."""
    if order < 2 or order % 2:
        raise GroupSpecError(f"Dih needs an even order >= 2, got {order}")
    n = order // 2
    name = f"Dih({order})"
    if n == 1:
        return enumerate_group([_cycle(2, (0, 1))], name=name)
    if n == 2:
        return enumerate_group([Permutation.from_cycles(4, [(0, 1)]),
                                Permutation.from_cycles(4, [(2, 3)])], name=name)
    rotation = _cycle(n, range(n))
    reflection = Permutation([(-i) % n for i in range(n)])
    return enumerate_group([rotation, reflection], name=name)


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: <a, x | a^2n = 1, x^2 = a^n, x^-1 a x = a^-1>."""
    if n < 1:
        raise GroupSpecError(f"Dic needs n >= 1, got {n}")
    m = 2 * n

    def mul(i: int, j: int) -> int:
        (ji, ki), (jj, kj) = divmod(i, m), divmod(j, m)
        if ji == 0:
            return jj * m + (ki + kj) % m
        if jj == 0:
            return m + (ki - kj) % m
        return (ki - kj + n) % m

    return regular_representation(CayleyTable.from_function(2 * m, mul), name=f"Dic({n})")


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"Sym needs n >= 1, got {n}")
    name = f"Sym({n})"
    if n == 1:
        return enumerate_group([Permutation.identity(1)], name=name)
    gens = [_cycle(n, (0, 1))]
    if n > 2:
        gens.append(_cycle(n, range(n)))
    return enumerate_group(gens, name=name)


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupSpecError(f"Alt needs n >= 1, got {n}")
    name = f"Alt({n})"
    if n < 3:
        return enumerate_group([Permutation.identity(n)], name=name)
    gens = [_cycle(n, (0, 1, 2))]
    if n > 3:
        gens.append(_cycle(n, range(n)) if n % 2 else _cycle(n, range(1, n)))
    return enumerate_group(gens, name=name)


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    if not is_prime(p):
        raise GroupSpecError(f"ElemAb needs a prime p, got {p}")
    if k < 0:
        raise GroupSpecError(f"ElemAb needs k >= 0, got {k}")
    name = f"ElemAb({p},{k})"
    if k == 0:
        return enumerate_group([Permutation.identity(1)], name=name)
    if p ** k > current_caps().order:
        raise CapExceeded("ElemAb", p ** k, current_caps().order)
    degree = p * k
    gens = [_cycle(degree, range(i * p, (i + 1) * p)) for i in range(k)]
    return enumerate_group(gens, name=name)


def heisenberg_table(p: int) -> CayleyTable:
    """Upper unitriangular 3x3 matrices over Z/p as triples (a, b, c):
    (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')."""

    def mul(i: int, j: int) -> int:
        a, b, c = i // (p * p), (i // p) % p, i % p
        a2, b2, c2 = j // (p * p), (j // p) % p, j % p
        return ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p

    return CayleyTable.from_function(p ** 3, mul)


def heisenberg(p: int) -> FiniteGroup:
    if not is_prime(p):
        raise GroupSpecError(f"Heis needs a prime p, got {p}")
    if p ** 3 > current_caps().order:
        raise CapExceeded("Heis", p ** 3, current_caps().order)
    return regular_representation(heisenberg_table(p), name=f"Heis({p})")


def wreath_cyclic(p: int) -> FiniteGroup:
    """C_p wr C_p acting imprimitively on p^2 points (p blocks of size p)."""
    if not is_prime(p):
        raise GroupSpecError(f"Wr needs a prime p, got {p}")
    order = p ** (p + 1)
    if order > current_caps().order:
        raise CapExceeded("Wr", order, current_caps().order)
    degree = p * p
    base = _cycle(degree, range(p))
    top = Permutation([((i // p + 1) % p) * p + i % p for i in range(degree)])
    return enumerate_group([base, top], name=f"Wr({p})")


def pair_element(g: Permutation, h: Permutation) -> Permutation:
    """The element ``(g, h)`` of a direct product built by :func:`direct_product`."""
    shift = g.degree
    return Permutation(g.images + tuple(shift + i for i in h.images))


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """G x H on the disjoint union of the two point sets (G's points first)."""
    cap = current_caps().order
    if G.order * H.order > cap:
        raise CapExceeded("direct product", G.order * H.order, cap)
    eG, eH = G.identity, H.identity
    gens = [pair_element(g, eH) for g in G.generators] + [pair_element(eG, h) for h in H.generators]
    if name is None and G.name and H.name:
        name = f"prod({G.name},{H.name})"
    return enumerate_group(gens, name=name)


_BUILDERS = {
    "Cyc": cyclic,
    "Dih": dihedral,
    "Dic": dicyclic,
    "Sym": symmetric,
    "Alt": alternating,
    "ElemAb": elementary_abelian,
    "Heis": heisenberg,
    "Wr": wreath_cyclic,
}


def _as_spec(spec: GroupSpec | str) -> GroupSpec:
    return parse_group_spec(spec) if isinstance(spec, str) else spec


def build_named(spec: GroupSpec | str) -> FiniteGroup:
    """Build a single named-family atom such as ``Dih(8)``."""
    root = _as_spec(spec).root
    if not isinstance(root, Atom):
        raise GroupSpecError(f"{root} is not a named family")
    return _BUILDERS[root.family](*root.params)


def build_group(spec: GroupSpec | str) -> FiniteGroup:
    """Build any group-spec expression, products and file atoms included."""
    return _build(_as_spec(spec).root)


def _build(node: Node) -> FiniteGroup:
    if isinstance(node, Atom):
        return _BUILDERS[node.family](*node.params)
    if isinstance(node, FileAtom):
        from .harness.groupfile import load_group_file

        G = load_group_file(node.path)
        G.name = str(node)
        return G
    left, right = _build(node.left), _build(node.right)
    return direct_product(left, right, name=str(node))
