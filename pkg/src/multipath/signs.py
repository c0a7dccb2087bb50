"""Sign assignments on path posets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import Digraph
from .errors import MissingCover
from .poset import PathPoset


@dataclass(frozen=True)
class SignAssignment:
    """``signs[k]`` is the Z/2 label of ``poset.covers[k]``."""

    signs: tuple[int, ...]


def canonical_sign(p: PathPoset, g: Digraph | None = None,
                   order: Sequence[int] | None = None) -> SignAssignment:
    """Parity of the edges of the lower multipath that precede the added edge.

    ``order`` optionally ranks the edges (``order[e]`` is the rank of edge e);
    by default the graph's own edge order is used.
    """
    if g is not None and g != p.graph:
        raise ValueError("poset was not built from this graph")
    if order is None:
        signs = tuple((p.masks[lo] & ((1 << e) - 1)).bit_count() & 1 for lo, _, e in p.covers)
        return SignAssignment(signs)
    rank = list(order)
    out = []
    for lo, _, e in p.covers:
        m = p.masks[lo]
        before = sum(1 for f in range(m.bit_length()) if m >> f & 1 and rank[f] < rank[e])
        out.append(before & 1)
    return SignAssignment(tuple(out))


@dataclass(frozen=True)
class SignReport:
    violations: tuple[tuple[int, int, int], ...]  # (bottom mask, edge, edge)
    squares_checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_sign(p: PathPoset, s: SignAssignment) -> SignReport:
    """Every square must carry an odd number of 1-labels."""
    if len(s.signs) != len(p.covers):
        raise MissingCover(f"{len(p.covers)} covers but {len(s.signs)} signs")
    label = {(lo, e): s.signs[k] for k, (lo, _, e) in enumerate(p.covers)}
    bad = []
    checked = 0
    for x, m in enumerate(p.masks):
        adds = sorted(e for _, e in p.up_covers[x])
        for a in range(len(adds)):
            for b in range(a + 1, len(adds)):
                e, f = adds[a], adds[b]
                top = m | (1 << e) | (1 << f)
                if top not in p.index:
                    continue
                ye, yf = p.index[m | (1 << e)], p.index[m | (1 << f)]
                try:
                    total = label[(x, e)] + label[(ye, f)] + label[(x, f)] + label[(yf, e)]
                except KeyError as exc:
                    raise MissingCover(f"cover {exc.args[0]} has no sign") from None
                checked += 1
                if total % 2 != 1:
                    bad.append((m, e, f))
    return SignReport(tuple(bad), checked)

