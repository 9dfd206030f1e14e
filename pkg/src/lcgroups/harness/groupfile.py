"""Generator files: one permutation per line in 1-based cycle notation.

Example::

    # dihedral group of order 8
    (1 2 3 4)
    (1 3)

``#`` starts a comment, blank lines are ignored, ``()`` is the identity and
the degree is the largest point mentioned anywhere in the file.
"""
from __future__ import annotations

import re
from pathlib import Path

from ..perm import FiniteGroup, Permutation, enumerate_group

_CYCLE = re.compile(r"\(([^()]*)\)")


class GroupFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line


def parse_cycles_line(text: str, lineno: int | None = None) -> list[tuple[int, ...]]:
    """Parse ``(1 2 3)(4 5)`` into 0-based cycles, rejecting repeated points."""
    rest = _CYCLE.sub("", text).strip()
    if rest:
        raise GroupFileError(f"unexpected text {rest!r}", lineno)
    cycles = []
    seen: set[int] = set()
    for m in _CYCLE.finditer(text):
        body = m.group(1).replace(",", " ").split()
        cycle = []
        for tok in body:
            if not tok.isdigit() or int(tok) < 1:
                raise GroupFileError(f"bad point {tok!r} (points are positive integers)", lineno)
            point = int(tok) - 1
            if point in seen:
                raise GroupFileError(f"repeated point {point + 1}", lineno)
            seen.add(point)
            cycle.append(point)
        if cycle:
            cycles.append(tuple(cycle))
    return cycles


def parse_group_text(text: str) -> list[Permutation]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rows.append((lineno, parse_cycles_line(line, lineno)))
    if not rows:
        raise GroupFileError("no generators found")
    degree = max((max(c) + 1 for _, cycles in rows for c in cycles), default=1)
    return [Permutation.from_cycles(degree, cycles) for _, cycles in rows]


def load_group_file(path: str | Path) -> FiniteGroup:
    text = Path(path).read_text()
    return enumerate_group(parse_group_text(text), name=f"file:{path}")


def dump_group(G: FiniteGroup) -> str:
    return "".join(g.cycle_string() + "\n" for g in G.generators)
