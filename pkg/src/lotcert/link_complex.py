"""The link of the presentation complex of a LOG, angles and curvature.

The presentation complex K of a LOG has a single vertex, one 1-cell per
vertex of the LOG and one square 2-cell per edge, attached along
``s(e) l(e) t(e)^-1 l(e)^-1``.  The link of the vertex is an undirected
multigraph on the signed symbols ``x+`` / ``x-``; its edges are the corners
of the 2-cells.  An edge e with source x_i, target x_j and label x_k
contributes four corners:

    positive       x_i+ x_k+
    negative       x_k- x_j-
    mixed_source   x_i- x_k+
    mixed_target   x_k- x_j+

Corners are never deduplicated: the link is a multigraph keyed by
(owner edge, kind), and parallel corners or loops are honest cycles.
All curvature arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .log_model import Edge, Log

PLUS = "+"
MINUS = "-"
CORNER_KINDS = ("positive", "negative", "mixed_source", "mixed_target")

CornerKey = tuple[str, str]  # (owner edge id, kind)


@dataclass(frozen=True)
class SignedVertex:
    vertex: str
    sign: str

    @property
    def text(self) -> str:
        return self.vertex + self.sign

    def flipped(self) -> "SignedVertex":
        return SignedVertex(self.vertex, MINUS if self.sign == PLUS else PLUS)


@dataclass(frozen=True)
class Corner:
    owner: str
    kind: str
    ends: tuple[SignedVertex, SignedVertex]

    @property
    def key(self) -> CornerKey:
        return (self.owner, self.kind)


@dataclass(frozen=True)
class LinkGraph:
    nodes: tuple[SignedVertex, ...]
    corners: tuple[Corner, ...]

    def to_multigraph(self) -> "Multigraph":
        return Multigraph(
            self.nodes,
            tuple((c.key, c.ends[0], c.ends[1]) for c in self.corners),
        )

    def degrees(self) -> dict[SignedVertex, int]:
        deg = {n: 0 for n in self.nodes}
        for c in self.corners:
            deg[c.ends[0]] += 1
            deg[c.ends[1]] += 1
        return deg


@dataclass(frozen=True)
class Multigraph:
    """A plain undirected multigraph: edges are (key, u, v) with keys unique."""

    nodes: tuple
    edges: tuple


@dataclass(frozen=True)
class Walk:
    """A closed edge walk; nodes has one more entry than edges."""

    nodes: tuple
    edges: tuple


def corner_ends(edge: Edge, kind: str) -> tuple[SignedVertex, SignedVertex]:
    s, t, l = edge.src, edge.tgt, edge.lab
    if kind == "positive":
        return (SignedVertex(s, PLUS), SignedVertex(l, PLUS))
    if kind == "negative":
        return (SignedVertex(l, MINUS), SignedVertex(t, MINUS))
    if kind == "mixed_source":
        return (SignedVertex(s, MINUS), SignedVertex(l, PLUS))
    if kind == "mixed_target":
        return (SignedVertex(l, MINUS), SignedVertex(t, PLUS))
    raise ValueError(f"unknown corner kind {kind!r}")


def build_link(log: Log) -> LinkGraph:
    """The link of the unique vertex of the presentation complex."""
    nodes = []
    for v in log.vertices:
        nodes.append(SignedVertex(v, PLUS))
        nodes.append(SignedVertex(v, MINUS))
    corners = []
    for e in log.edges:
        for kind in CORNER_KINDS:
            corners.append(Corner(e.eid, kind, corner_ends(e, kind)))
    return LinkGraph(tuple(nodes), tuple(corners))


def induced_subgraph(link: LinkGraph, nodes: Iterable[SignedVertex]) -> LinkGraph:
    """Full subgraph: keeps corners with both endpoints among the nodes."""
    nset = set(nodes)
    kept_nodes = tuple(n for n in link.nodes if n in nset)
    corners = tuple(
        c for c in link.corners if c.ends[0] in nset and c.ends[1] in nset
    )
    return LinkGraph(kept_nodes, corners)


def corner_key_str(key: CornerKey) -> str:
    return f"{key[0]}:{key[1]}"


# ---------------------------------------------------------------------------
# generic multigraph machinery


def _adjacency(g: Multigraph) -> dict:
    adj = defaultdict(list)
    for key, u, v in g.edges:
        adj[u].append((key, v))
        if u != v:
            adj[v].append((key, u))
    return adj


def find_path(g: Multigraph, start, goal, allowed: Optional[frozenset] = None) -> Optional[Walk]:
    """BFS path from start to goal, optionally restricted to allowed edge keys."""
    if start == goal:
        return Walk((start,), ())
    adj = _adjacency(g)
    prev = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for key, w in adj[u]:
            if allowed is not None and key not in allowed:
                continue
            if w in prev:
                continue
            prev[w] = (u, key)
            if w == goal:
                nodes = [w]
                keys = []
                cur = w
                while prev[cur] is not None:
                    cur, k = prev[cur]
                    nodes.append(cur)
                    keys.append(k)
                nodes.reverse()
                keys.reverse()
                return Walk(tuple(nodes), tuple(keys))
            queue.append(w)
    return None


def components(g: Multigraph) -> dict:
    """Map each node to a canonical component representative (first seen)."""
    adj = _adjacency(g)
    rep = {}
    for n in g.nodes:
        if n in rep:
            continue
        queue = deque([n])
        rep[n] = n
        while queue:
            u = queue.popleft()
            for _, w in adj[u]:
                if w not in rep:
                    rep[w] = n
                    queue.append(w)
    return rep


def is_forest(g: Multigraph) -> tuple[bool, Optional[Walk]]:
    """Multigraph forest test: a loop or a pair of parallel edges is a cycle.

    On failure the witness is a simple cycle, as a closed walk.
    """
    uf_parent = {n: n for n in g.nodes}

    def find(x):
        while uf_parent[x] != x:
            uf_parent[x] = uf_parent[uf_parent[x]]
            x = uf_parent[x]
        return x

    accepted = []
    for key, u, v in g.edges:
        if u == v:
            return False, Walk((u, u), (key,))
        ru, rv = find(u), find(v)
        if ru == rv:
            path = find_path(Multigraph(g.nodes, tuple(accepted)), u, v)
            assert path is not None
            return False, Walk(path.nodes + (u,), path.edges + (key,))
        uf_parent[rv] = ru
        accepted.append((key, u, v))
    return True, None


def bridges(g: Multigraph) -> frozenset:
    """Edge keys whose removal disconnects their component.

    Loops and members of parallel bundles are never bridges.
    """
    adj = _adjacency(g)
    disc: dict = {}
    low: dict = {}
    out = set()
    counter = [0]

    for root in g.nodes:
        if root in disc:
            continue
        stack = [(root, None, iter(adj[root]))]
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        while stack:
            u, in_key, it = stack[-1]
            advanced = False
            for key, w in it:
                if key == in_key:
                    continue
                if u == w:
                    continue  # loop: irrelevant to low-links
                if w not in disc:
                    disc[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append((w, key, iter(adj[w])))
                    advanced = True
                    break
                low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[u])
                    if low[u] > disc[p]:
                        out.add(in_key)
    return frozenset(out)


def is_relative_forest(g: Multigraph, sub_keys: Iterable) -> tuple[bool, Optional[Walk]]:
    """True iff every homology reduced cycle stays inside the subgraph.

    Decided by the bridge criterion: every edge outside the subgraph must be
    a bridge (a closed walk crosses a bridge only by using it in both
    directions, and any non-bridge edge lies on a simple cycle).
    """
    sub = set(sub_keys)
    bridge_keys = bridges(g)
    for key, u, v in g.edges:
        if key in sub or key in bridge_keys:
            continue
        if u == v:
            return False, Walk((u, u), (key,))
        rest = tuple(e for e in g.edges if e[0] != key)
        path = find_path(Multigraph(g.nodes, rest), u, v)
        assert path is not None  # non-bridge: endpoints stay connected
        return False, Walk(path.nodes + (u,), path.edges + (key,))
    return True, None


# ---------------------------------------------------------------------------
# angles and curvature

AngleAssignment = Mapping[CornerKey, int]
SignAssignment = Mapping[str, str]


@dataclass(frozen=True)
class CurvatureReport:
    kappa_vertex: int
    kappa_cells: dict
    chi_complex: int
    chi_link: int

    @property
    def gauss_bonnet(self) -> tuple[int, int]:
        lhs = 2 * self.chi_complex
        rhs = self.kappa_vertex + sum(self.kappa_cells.values())
        return lhs, rhs


def _angle(angles: AngleAssignment, key: CornerKey) -> int:
    try:
        a = angles[key]
    except KeyError:
        raise ValueError(f"missing angle for corner {corner_key_str(key)}")
    if a not in (0, 1):
        raise ValueError(f"angle of {corner_key_str(key)} must be 0 or 1, got {a!r}")
    return a


def curvature(log: Log, angles: AngleAssignment) -> CurvatureReport:
    """Vertex and 2-cell curvature of the angled complex; exact integers.

    kappa(v) = 2 - chi(link) - sum of all angles, with
    chi(link) = #nodes - #corners; every LOG 2-cell is a square, so
    kappa(d) = sum of the four angles - 2.  The combinatorial Gauss-Bonnet
    identity 2 chi(K) = kappa(v) + sum kappa(d) then holds identically.
    """
    n, m = len(log.vertices), len(log.edges)
    chi_link = 2 * n - 4 * m
    total = 0
    kappa_cells = {}
    for e in log.edges:
        cell = sum(_angle(angles, (e.eid, kind)) for kind in CORNER_KINDS)
        kappa_cells[e.eid] = cell - 2
        total += cell
    report = CurvatureReport(
        kappa_vertex=2 - chi_link - total,
        kappa_cells=kappa_cells,
        chi_complex=1 - n + m,
        chi_link=chi_link,
    )
    lhs, rhs = report.gauss_bonnet
    assert lhs == rhs
    return report


@dataclass(frozen=True)
class ColoringResult:
    ok: bool
    positive_cells: tuple = ()
    bad_cycle: Optional[Walk] = None
    bad_cycle_angle: Optional[int] = None


def _zero_subgraph(link: LinkGraph, angles: AngleAssignment) -> Multigraph:
    return Multigraph(
        link.nodes,
        tuple(
            (c.key, c.ends[0], c.ends[1])
            for c in link.corners
            if _angle(angles, c.key) == 0
        ),
    )


def verify_coloring_test(log: Log, angles: AngleAssignment) -> ColoringResult:
    """Zero/one coloring test.

    (a) every 2-cell has curvature <= 0 and (b) every simple reduced cycle of
    the link has total angle >= 2.  Condition (b) is checked through the
    equivalent criterion: the angle-0 corners form a forest Z and every
    angle-1 corner joins two distinct components of Z.
    """
    link = build_link(log)
    report = curvature(log, angles)
    positive = tuple(eid for eid, k in report.kappa_cells.items() if k > 0)

    zero = _zero_subgraph(link, angles)
    forest, cycle = is_forest(zero)
    if not forest:
        return ColoringResult(False, positive, cycle, 0)

    rep = components(zero)
    for c in link.corners:
        if _angle(angles, c.key) != 1:
            continue
        u, v = c.ends
        if rep[u] != rep[v]:
            continue
        path = find_path(zero, u, v)
        assert path is not None
        walk = Walk(path.nodes + (u,), path.edges + (c.key,))
        return ColoringResult(False, positive, walk, 1)

    return ColoringResult(not positive, positive, None, None)


@dataclass(frozen=True)
class RelativeColoringResult:
    ok: bool
    positive_outside_cells: tuple = ()
    bad_cycle: Optional[Walk] = None
    bad_cycle_angle: Optional[int] = None


def verify_relative_coloring_test(log: Log, parts, angles: AngleAssignment) -> RelativeColoringResult:
    """Relative zero/one coloring test against a wedge of sub-LOT complexes.

    (1) cells outside the parts have curvature <= 0, and (2) every simple
    cycle of total angle <= 1 lies entirely inside the parts' links.  With
    Z the angle-0 subgraph, (2) holds iff every angle-0 corner outside the
    parts is a bridge of Z and every angle-1 corner either joins distinct
    Z-components or lies in a part with a Z-path between its endpoints inside
    the parts.  Simple cycles suffice: homology reduced closed walks
    decompose into them.
    """
    part_edges: set[str] = set()
    for sub in parts:
        eids = set(sub.edge_ids)
        if part_edges & eids:
            raise ValueError("parts are not edge-disjoint")
        part_edges |= eids

    link = build_link(log)
    report = curvature(log, angles)
    positive = tuple(
        eid for eid, k in report.kappa_cells.items() if k > 0 and eid not in part_edges
    )

    zero = _zero_subgraph(link, angles)
    bridge_keys = bridges(zero)
    inside = frozenset(c.key for c in link.corners if c.owner in part_edges)

    for key, u, v in zero.edges:
        if key in inside or key in bridge_keys:
            continue
        if u == v:
            return RelativeColoringResult(False, positive, Walk((u, u), (key,)), 0)
        rest = tuple(e for e in zero.edges if e[0] != key)
        path = find_path(Multigraph(zero.nodes, rest), u, v)
        assert path is not None
        walk = Walk(path.nodes + (u,), path.edges + (key,))
        return RelativeColoringResult(False, positive, walk, 0)

    rep = components(zero)
    zero_inside = frozenset(k for k, _, _ in zero.edges if k in inside)
    for c in link.corners:
        if _angle(angles, c.key) != 1:
            continue
        u, v = c.ends
        if rep.get(u) != rep.get(v):
            continue
        ok_here = False
        if c.key in inside:
            contained = find_path(zero, u, v, allowed=zero_inside)
            ok_here = contained is not None
        if not ok_here:
            path = find_path(zero, u, v)
            assert path is not None
            walk = Walk(path.nodes + (u,), path.edges + (c.key,))
            return RelativeColoringResult(False, positive, walk, 1)

    return RelativeColoringResult(not positive, positive, None, None)


# ---------------------------------------------------------------------------
# export


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def link_to_dot(link: LinkGraph, angles: Optional[AngleAssignment] = None) -> str:
    """Deterministic DOT rendering; angle-0 corners solid, angle-1 dashed."""
    lines = ["graph link {"]
    for n in link.nodes:
        lines.append(f"  {_dot_quote(n.text)};")
    for c in link.corners:
        attrs = [f"label={_dot_quote(f'{c.owner} {c.kind}')}"]
        if angles is not None:
            attrs.append("style=" + ("dashed" if _angle(angles, c.key) else "solid"))
        u, v = c.ends
        lines.append(
            f"  {_dot_quote(u.text)} -- {_dot_quote(v.text)} [{', '.join(attrs)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
