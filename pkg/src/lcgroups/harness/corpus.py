"""The shipped corpus of groups the campaigns run over."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources

from ..constructors import Atom, FileAtom, GroupSpec, Node, Product, parse_group_spec
from ..structure import big_omega, prime_factors


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    spec: GroupSpec
    tags: frozenset[str]
    caps: dict[str, int] = field(default_factory=dict)


def spec_order(node: Node) -> int | None:
    """Order predicted by the family formulas (None for file atoms)."""
    if isinstance(node, Product):
        a, b = spec_order(node.left), spec_order(node.right)
        return None if a is None or b is None else a * b
    if isinstance(node, FileAtom):
        return None
    n = node.params[0]
    return {
        "Cyc": lambda: n,
        "Dih": lambda: n,
        "Dic": lambda: 4 * n,
        "Sym": lambda: math.factorial(n),
        "Alt": lambda: max(1, math.factorial(n) // 2),
        "ElemAb": lambda: n ** node.params[1],
        "Heis": lambda: n ** 3,
        "Wr": lambda: n ** (n + 1),
    }[node.family]()


def _auto_tags(spec: GroupSpec) -> set[str]:
    tags = {"all"}
    order = spec_order(spec.root)
    if order is not None:
        if len(prime_factors(order)) == 1:
            tags.add("p-group")
        if big_omega(order) <= 3:
            tags.add("at-most-three-primes")
    if isinstance(spec.root, Product):
        tags.add("product")
    elif isinstance(spec.root, Atom):
        tags.add(spec.root.family.lower())
    return tags


# (expression, extra tags)
_SPECS: list[tuple[str, tuple[str, ...]]] = (
    [(f"Cyc({n})", ("abelian",)) for n in range(1, 25)]
    + [(f"Dih({2 * n})", ("supersolvable-expected",)) for n in range(1, 17)]
    + [(f"Dic({n})", ("supersolvable-expected",)) for n in (2, 3, 4, 5, 6)]
    + [
        ("Sym(3)", ("supersolvable-expected", "frobenius-expected")),
        ("Sym(4)", ()),
        ("Sym(5)", ()),
        ("Alt(4)", ("paper-example", "frobenius-expected")),
        ("Alt(5)", ()),
    ]
    + [(f"ElemAb({p},{k})", ("abelian",)) for p in (2, 3, 5) for k in (1, 2, 3)]
    + [
        ("Heis(3)", ()),
        ("Wr(2)", ("paper-example",)),
        ("Wr(3)", ("paper-example",)),
        ("prod(Dih(8),Dih(8))", ("paper-example",)),
        ("prod(Dih(8),Cyc(3))", ("coprime-exponents",)),
        ("prod(Dih(8),Cyc(9))", ("coprime-exponents",)),
        ("prod(Dih(8),Cyc(2))", ()),
        ("prod(Dih(8),Dic(2))", ()),
        ("prod(Dic(2),Cyc(2))", ()),
        ("prod(Dic(2),Cyc(3))", ("coprime-exponents",)),
        ("prod(Dic(2),Cyc(5))", ("coprime-exponents",)),
        ("prod(Cyc(4),Cyc(2))", ()),
        ("prod(Sym(3),Cyc(2))", ()),
        ("prod(Sym(3),Cyc(3))", ()),
        ("prod(Sym(3),Cyc(5))", ("coprime-exponents",)),
        ("prod(Sym(3),Sym(3))", ()),
        ("prod(Dih(10),Cyc(3))", ("coprime-exponents",)),
        ("prod(Dih(6),Dih(10))", ()),
        ("prod(Alt(4),Cyc(2))", ()),
        ("prod(Alt(4),Cyc(5))", ("coprime-exponents",)),
        ("prod(Heis(3),Cyc(3))", ()),
    ]
)


# Generator-file fixtures shipped with the package: (display name, file, extra tags).
_FIXTURES: list[tuple[str, str, tuple[str, ...]]] = [
    ("MaxClass81", "maxclass81.txt", ("p-group", "lc-sharp")),
]


def fixture_path(filename: str) -> str:
    return str(resources.files("lcgroups.harness") / "data" / filename)


def default_corpus() -> list[CorpusEntry]:
    rows = [(parse_group_spec(expr), None, extra) for expr, extra in _SPECS]
    rows += [(parse_group_spec(f"file:{fixture_path(fn)}"), name, extra) for name, fn, extra in _FIXTURES]
    entries = []
    seen: set[str] = set()
    for spec, name, extra in rows:
        name = name or spec.expression
        if name in seen:
            raise ValueError(f"duplicate corpus entry {name}")
        seen.add(name)
        entries.append(CorpusEntry(name, spec, frozenset(_auto_tags(spec) | set(extra))))
    return entries


TAG_ALIASES = {"p-groups": "p-group"}


def filter_corpus(entries: list[CorpusEntry], tag: str | None) -> list[CorpusEntry]:
    if tag is None:
        return list(entries)
    tag = TAG_ALIASES.get(tag, tag)
    return [e for e in entries if tag in e.tags or e.name == tag]
