"""Enumeration of multipaths and the path poset they form."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property

from .digraph import Digraph, components
from .errors import SizeLimitExceeded

DEFAULT_SIZE_CAP = 1 << 24
SIZE_CAP_ENV = "MULTIPATH_SIZE_CAP"


def default_size_cap() -> int:
    raw = os.environ.get(SIZE_CAP_ENV)
    return int(raw) if raw else DEFAULT_SIZE_CAP


@dataclass(frozen=True)
class Multipath:
    edge_set: int
    level: int
    component_partition: tuple[tuple[int, ...], ...]

    def edges(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.edge_set.bit_length()) if self.edge_set >> i & 1)


@dataclass(frozen=True)
class PathPoset:
    """Multipaths as bitmasks, ids ordered by (level, bitmask).

    ``covers`` holds ``(lower id, upper id, added edge)`` triples sorted by
    lower id then added edge.
    """

    graph: Digraph
    masks: tuple[int, ...]
    covers: tuple[tuple[int, int, int], ...]
    index: dict[int, int] = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.masks)

    @cached_property
    def levels(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = []
        for i, m in enumerate(self.masks):
            k = m.bit_count()
            while len(out) <= k:
                out.append([])
            out[k].append(i)
        return tuple(tuple(x) for x in out)

    def level_of(self, i: int) -> int:
        return self.masks[i].bit_count()

    def position_in_level(self, i: int) -> int:
        return self._positions[i]

    @cached_property
    def _positions(self) -> tuple[int, ...]:
        pos = [0] * len(self.masks)
        for ids in self.levels:
            for k, i in enumerate(ids):
                pos[i] = k
        return tuple(pos)

    @cached_property
    def up_covers(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """For each id, the ``(upper id, added edge)`` pairs above it."""
        out: list[list[tuple[int, int]]] = [[] for _ in self.masks]
        for lo, hi, e in self.covers:
            out[lo].append((hi, e))
        return tuple(tuple(x) for x in out)

    def multipath(self, i: int) -> Multipath:
        m = self.masks[i]
        return Multipath(m, self.level_of(i), components(self.graph, m))


def enumerate_path_poset(g: Digraph, size_cap: int | None = None) -> PathPoset:
    """Breadth-first by level: each multipath is extended by every absent edge."""
    cap = default_size_cap() if size_cap is None else size_cap
    src = [s for s, _ in g.edges]
    tgt = [t for _, t in g.edges]
    E = g.edge_count
    current = [0]
    found = [[0]]
    raw_covers: list[tuple[int, int, int]] = []
    total = 1
    if total > cap:
        raise SizeLimitExceeded(f"path poset exceeds cap {cap}")
    while current:
        nxt: set[int] = set()
        for m in current:
            succ: dict[int, int] = {}
            pred: set[int] = set()
            for i in range(E):
                if m >> i & 1:
                    succ[src[i]] = tgt[i]
                    pred.add(tgt[i])
            for i in range(E):
                if m >> i & 1:
                    continue
                s, t = src[i], tgt[i]
                if s in succ or t in pred:
                    continue
                # adding s -> t closes a cycle iff t already reaches s
                v = t
                while v in succ and v != s:
                    v = succ[v]
                if v == s:
                    continue
                up = m | (1 << i)
                raw_covers.append((m, up, i))
                if up not in nxt:
                    nxt.add(up)
                    total += 1
                    if total > cap:
                        raise SizeLimitExceeded(f"path poset exceeds cap {cap}")
        current = sorted(nxt)
        if current:
            found.append(current)
    masks = tuple(m for lvl in found for m in lvl)
    index = {m: i for i, m in enumerate(masks)}
    covers = tuple(sorted((index[a], index[b], e) for a, b, e in raw_covers))
    return PathPoset(g, masks, covers, index)


def level_counts(p: PathPoset) -> list[int]:
    return [len(ids) for ids in p.levels]


@dataclass(frozen=True)
class AxiomReport:
    downward_closed: bool
    squared: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_poset_axioms(p: PathPoset) -> AxiomReport:
    """Check cover consistency, downward closure and the squared property."""
    problems: list[str] = []
    n = len(p.masks)
    up: list[set[int]] = [set() for _ in range(n)]
    down: list[set[int]] = [set() for _ in range(n)]
    for lo, hi, e in p.covers:
        a, b = p.masks[lo], p.masks[hi]
        if a >> e & 1 or b != a | (1 << e):
            problems.append(f"cover {lo}->{hi} does not add exactly edge e{e}")
        up[lo].add(hi)
        down[hi].add(lo)
    closed = True
    present = set(p.masks)
    for i, m in enumerate(p.masks):
        for e in range(m.bit_length()):
            if m >> e & 1:
                sub = m & ~(1 << e)
                if sub not in present:
                    closed = False
                    problems.append(f"multipath {m:#b} present but {sub:#b} missing")
                elif p.index[sub] not in down[i]:
                    problems.append(f"cover {sub:#b} -> {m:#b} missing")
    squared = True
    for x in range(n):
        for y in up[x]:
            for z in up[y]:
                others = [w for w in up[x] & down[z] if w != y]
                if len(others) != 1:
                    squared = False
                    problems.append(
                        f"chain {p.masks[x]:#b} < {p.masks[y]:#b} < {p.masks[z]:#b} "
                        f"has {len(others)} completions")
    return AxiomReport(closed, squared, tuple(problems))


def _label(mask: int) -> str:
    edges = [f"e{i}" for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(edges) + "}"


def hasse_export(p: PathPoset) -> str:
    lines = ["digraph Hasse {", "  rankdir=BT;"]
    for i, m in enumerate(p.masks):
        lines.append(f'  n{i} [label="{_label(m)}"];')
    for lo, hi, e in p.covers:
        lines.append(f'  n{lo} -> n{hi} [label="e{e}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def flat_dump(p: PathPoset) -> str:
    """One bitmask per line (binary, edge 0 rightmost), a header per level."""
    width = max(p.graph.edge_count, 1)
    out = []
    for k, ids in enumerate(p.levels):
        out.append(f"# level {k}")
        out.extend(format(p.masks[i], f"0{width}b") for i in ids)
    return "\n".join(out) + "\n"
