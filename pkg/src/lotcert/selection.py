"""The selection graph of a LOG and admissible two-colorings of its arcs.

Every edge e of the LOG contributes two arcs on the LOG's own vertex set:

    a(e) = s(e) -> l(e)      b(e) = t(e) -> l(e)

Reorienting an edge swaps the roles of its a- and b-arc but leaves the arc
multiset unchanged, so the selection graph is a reorientation invariant.
A two-coloring of the arcs is *admissible* when a(e) and b(e) receive
different colors for every edge; an admissible coloring selects the
reorientation for which the black arcs are exactly the images of the
positive corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .link_complex import Multigraph
from .log_model import Log, reorient

ArcKey = tuple[str, str]  # (owner edge id, 'a' | 'b')


@dataclass(frozen=True)
class SelArc:
    owner: str
    kind: str  # 'a' or 'b'
    src: str
    dst: str

    @property
    def key(self) -> ArcKey:
        return (self.owner, self.kind)


@dataclass(frozen=True)
class SelectionGraph:
    nodes: tuple[str, ...]
    arcs: tuple[SelArc, ...]

    def arc(self, key: ArcKey) -> SelArc:
        for a in self.arcs:
            if a.key == key:
                return a
        raise ValueError(f"unknown arc {key!r}")

    def indegree(self) -> dict[str, int]:
        deg = {v: 0 for v in self.nodes}
        for a in self.arcs:
            deg[a.dst] += 1
        return deg

    def to_multigraph(self) -> Multigraph:
        return Multigraph(self.nodes, tuple((a.key, a.src, a.dst) for a in self.arcs))


# Arc colors of a two-coloring; black arcs become the positive side.
Partition2 = Mapping[ArcKey, str]

BLACK = "black"
WHITE = "white"


def build_selection_graph(log: Log) -> SelectionGraph:
    arcs = []
    for e in log.edges:
        arcs.append(SelArc(e.eid, "a", e.src, e.lab))
        arcs.append(SelArc(e.eid, "b", e.tgt, e.lab))
    return SelectionGraph(log.vertices, tuple(arcs))


def is_admissible(sel: SelectionGraph, partition: Partition2) -> tuple[bool, Optional[str]]:
    """True iff a(e) and b(e) are colored differently for every edge e.

    The witness is the first offending edge id.
    """
    owners = []
    seen = set()
    for a in sel.arcs:
        if a.owner not in seen:
            seen.add(a.owner)
            owners.append(a.owner)
    for owner in owners:
        ca = partition.get((owner, "a"))
        cb = partition.get((owner, "b"))
        if ca not in (BLACK, WHITE) or cb not in (BLACK, WHITE):
            raise ValueError(f"partition is not total at edge {owner!r}")
        if ca == cb:
            return False, owner
    return True, None


def flips_from_partition(log: Log, partition: Partition2) -> frozenset[str]:
    """Edges whose a-arc is white; flipping them makes every a-arc black."""
    return frozenset(e.eid for e in log.edges if partition[(e.eid, "a")] == WHITE)


def reorientation_from_partition(log: Log, partition: Partition2) -> Log:
    """The reorientation selected by an admissible partition.

    After reorienting, the positive side of the link maps isomorphically onto
    the black subgraph and the negative side onto the white subgraph.
    """
    sel = build_selection_graph(log)
    ok, witness = is_admissible(sel, partition)
    if not ok:
        raise ValueError(f"partition is not admissible at edge {witness!r}")
    return reorient(log, flips_from_partition(log, partition))


def beta_image(log: Log, sign: str) -> SelectionGraph:
    """Image of the signed side of the link under the vertex-collapsing map.

    The positive side maps onto the a-arcs, the negative side onto the
    b-arcs; either restriction is a bijection on edges.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    kind = "a" if sign == "+" else "b"
    sel = build_selection_graph(log)
    return SelectionGraph(sel.nodes, tuple(a for a in sel.arcs if a.kind == kind))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def selection_to_dot(sel: SelectionGraph, partition: Optional[Partition2] = None) -> str:
    """Deterministic DOT rendering, arcs ordered by (owner, kind)."""
    lines = ["digraph selection {"]
    for n in sel.nodes:
        lines.append(f"  {_dot_quote(n)};")
    for a in sorted(sel.arcs, key=lambda a: a.key):
        attrs = [f"label={_dot_quote(f'{a.kind}({a.owner})')}"]
        if partition is not None:
            attrs.append(f"color={_dot_quote(partition[a.key])}")
        lines.append(f"  {_dot_quote(a.src)} -> {_dot_quote(a.dst)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
