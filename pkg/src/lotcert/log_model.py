"""Labeled oriented graphs (LOGs) and purely graph-level operations on them.

A LOG is a finite directed graph in which every edge additionally carries a
vertex of the same graph as its *label*.  It encodes the group presentation
with one generator per vertex and one relator ``s(e) l(e) = l(e) t(e)`` per
edge.  A LOG whose underlying undirected graph is a forest is a LOF; a
connected LOF is a LOT.

Text format (line oriented, UTF-8, LF canonical on output):

    # comment to end of line
    vertices: x y z
    edge e1: x -> y : z
    edge e2: z -> y : x

Vertex names and edge ids are arbitrary non-empty tokens containing neither
whitespace nor ``:`` (the bare token ``->`` is also rejected).  The edge id
may be omitted (``edge: x -> y : z``), in which case ids ``e1, e2, ...`` are
assigned in order, skipping ids that appear explicitly elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence


class ParseError(ValueError):
    """Syntax or consistency error in the LOG text format."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Edge:
    eid: str
    src: str
    tgt: str
    lab: str


def _valid_name(tok: str) -> bool:
    # representable in the text format: no whitespace, ':' or '#', not '->'
    return bool(tok) and tok != "->" and not any(c in tok for c in ":#\t\n\r ") and tok == tok.strip()


@dataclass(frozen=True)
class Log:
    """An immutable LOG; vertices and edges keep their declaration order."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        seen = set()
        for v in self.vertices:
            if not _valid_name(v):
                raise ValueError(f"invalid vertex name {v!r}")
            if v in seen:
                raise ValueError(f"duplicate vertex {v!r}")
            seen.add(v)
        eids = set()
        for e in self.edges:
            if not _valid_name(e.eid):
                raise ValueError(f"invalid edge id {e.eid!r}")
            if e.eid in eids:
                raise ValueError(f"duplicate edge id {e.eid!r}")
            eids.add(e.eid)
            for field, name in ((e.src, "source"), (e.tgt, "target"), (e.lab, "label")):
                if field not in seen:
                    raise ValueError(f"edge {e.eid!r}: unknown {name} vertex {field!r}")

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.eid == eid:
                return e
        raise ValueError(f"unknown edge id {eid!r}")

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.eid for e in self.edges)

    def label_set(self) -> frozenset[str]:
        return frozenset(e.lab for e in self.edges)

    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def valency(self) -> dict[str, int]:
        """Undirected degree per vertex; a loop contributes 2."""
        deg = {v: 0 for v in self.vertices}
        for e in self.edges:
            deg[e.src] += 1
            deg[e.tgt] += 1
        return deg


def make_log(vertices: Sequence[str], edges: Iterable[tuple[str, str, str, str]]) -> Log:
    """Build a Log from (eid, src, tgt, label) tuples."""
    return Log(tuple(vertices), tuple(Edge(*e) for e in edges))


# ---------------------------------------------------------------------------
# text format


def _check_token(tok: str, what: str, line: int, col: int) -> str:
    # '#' opens a comment, so it can never occur inside a token
    if not tok or ":" in tok or "#" in tok or tok == "->":
        raise ParseError(f"invalid {what} {tok!r}", line, col)
    return tok


def parse_log(text: str) -> Log:
    """Parse the text format; raises ParseError with line/column on bad input."""
    vertices: list[str] = []
    header_seen = False
    raw_edges: list[tuple[Optional[str], str, str, str, int]] = []
    explicit_ids: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.strip()
        col = line.index(stripped[0]) + 1
        if not header_seen:
            if not stripped.startswith("vertices:"):
                raise ParseError("expected 'vertices:' header", lineno, col)
            header_seen = True
            for tok in stripped[len("vertices:"):].split():
                _check_token(tok, "vertex name", lineno, line.index(tok) + 1)
                if tok in vertices:
                    raise ParseError(f"duplicate vertex {tok!r}", lineno, line.index(tok) + 1)
                vertices.append(tok)
            continue
        if not stripped.startswith("edge"):
            raise ParseError("expected an 'edge' line", lineno, col)
        head, sep, rest = stripped.partition(":")
        if not sep:
            raise ParseError("missing ':' after edge id", lineno, col)
        id_toks = head[len("edge"):].split()
        if len(id_toks) > 1:
            raise ParseError("malformed edge id", lineno, col)
        eid = id_toks[0] if id_toks else None
        if eid is not None:
            _check_token(eid, "edge id", lineno, col)
            if eid in explicit_ids:
                raise ParseError(f"duplicate edge id {eid!r}", lineno, col)
            explicit_ids.add(eid)
        toks = rest.split()
        if len(toks) != 5 or toks[1] != "->" or toks[3] != ":":
            raise ParseError("expected '<src> -> <tgt> : <label>'", lineno, col)
        src, tgt, lab = toks[0], toks[2], toks[4]
        for tok in (src, tgt, lab):
            _check_token(tok, "vertex name", lineno, line.index(tok) + 1)
        for tok in (src, tgt, lab):
            if tok not in vertices:
                raise ParseError(f"unknown vertex {tok!r}", lineno, line.index(tok) + 1)
        raw_edges.append((eid, src, tgt, lab, lineno))

    if not header_seen:
        raise ParseError("empty document, expected 'vertices:' header", max(1, text.count("\n") + 1))

    edges = []
    counter = 1
    for eid, src, tgt, lab, lineno in raw_edges:
        if eid is None:
            while f"e{counter}" in explicit_ids:
                counter += 1
            eid = f"e{counter}"
            explicit_ids.add(eid)
        edges.append(Edge(eid, src, tgt, lab))
    return Log(tuple(vertices), tuple(edges))


def serialize_log(log: Log) -> str:
    """Canonical text form; parse_log(serialize_log(L)) == L."""
    lines = ["vertices: " + " ".join(log.vertices) if log.vertices else "vertices:"]
    for e in log.edges:
        lines.append(f"edge {e.eid}: {e.src} -> {e.tgt} : {e.lab}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# classification and reducedness


@dataclass(frozen=True)
class LogClass:
    kind: str  # "LOT" | "LOF" | "GeneralLOG"
    components: int


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def classify(log: Log) -> LogClass:
    """LOT iff connected and acyclic, LOF iff acyclic, else GeneralLOG."""
    uf = _UnionFind(log.vertices)
    acyclic = True
    for e in log.edges:
        if not uf.union(e.src, e.tgt):
            acyclic = False
    components = len({uf.find(v) for v in log.vertices})
    if acyclic and components == 1:
        kind = "LOT"
    elif acyclic:
        kind = "LOF"
    else:
        kind = "GeneralLOG"
    return LogClass(kind, components)


@dataclass(frozen=True)
class Flag:
    ok: bool
    witnesses: tuple = ()


@dataclass(frozen=True)
class ReducednessReport:
    boundary_reduced: Flag
    interior_reduced: Flag
    compressed: Flag
    injective: Flag

    @property
    def reduced(self) -> bool:
        return self.boundary_reduced.ok and self.interior_reduced.ok and self.compressed.ok


def reducedness_report(log: Log) -> ReducednessReport:
    """Check boundary/interior reducedness, compression and label injectivity.

    Every failing flag carries witnesses: offending vertices for the boundary
    condition, (vertex, edge, edge) triples for interior folds, edge ids for
    compression, and (edge, edge) pairs for label collisions.
    """
    labels = log.label_set()
    deg = log.valency()
    boundary_bad = tuple(v for v in log.vertices if deg[v] == 1 and v not in labels)

    interior_bad = []
    for j, ej in enumerate(log.edges):
        for ei in log.edges[:j]:
            if ei.lab != ej.lab:
                continue
            if ei.src == ej.src:
                interior_bad.append((ei.src, ei.eid, ej.eid))
            if ei.tgt == ej.tgt:
                interior_bad.append((ei.tgt, ei.eid, ej.eid))

    compressed_bad = tuple(e.eid for e in log.edges if e.lab in (e.src, e.tgt))

    injective_bad = []
    for j, ej in enumerate(log.edges):
        for ei in log.edges[:j]:
            if ei.lab == ej.lab:
                injective_bad.append((ei.eid, ej.eid))

    return ReducednessReport(
        boundary_reduced=Flag(not boundary_bad, boundary_bad),
        interior_reduced=Flag(not interior_bad, tuple(interior_bad)),
        compressed=Flag(not compressed_bad, compressed_bad),
        injective=Flag(not injective_bad, tuple(injective_bad)),
    )


# ---------------------------------------------------------------------------
# reductions

# Moves, in priority order:
#   ("compress", eid, keep_vertex, drop_vertex)   contract an edge whose label
#       equals one of its endpoints, identifying the endpoints;
#   ("fold", keep_eid, drop_eid, keep_vertex, drop_vertex)   two edges with the
#       same label both starting (or both ending) at a common vertex are folded
#       into one, identifying their far endpoints;
#   ("boundary", vertex, eid)   delete a valency-1 vertex that is not a label,
#       together with its edge.
# Each move strictly decreases |V| + |E|, so reduction terminates.


def _merge_vertices(log: Log, keep: str, drop: str, removed_eids: set[str]) -> Log:
    if keep != drop:
        idx = log.vertex_index()
        if idx[drop] < idx[keep]:
            keep, drop = drop, keep
    vertices = tuple(v for v in log.vertices if v != drop or drop == keep)

    def ren(v: str) -> str:
        return keep if v == drop else v

    edges = tuple(
        Edge(e.eid, ren(e.src), ren(e.tgt), ren(e.lab))
        for e in log.edges
        if e.eid not in removed_eids
    )
    return Log(vertices, edges)


def find_reduction_move(log: Log):
    """First applicable move under the priority compress > fold > boundary."""
    for e in log.edges:
        if e.lab in (e.src, e.tgt):
            return ("compress", e.eid, e.src, e.tgt)
    for j, ej in enumerate(log.edges):
        for ei in log.edges[:j]:
            if ei.lab != ej.lab:
                continue
            if ei.src == ej.src:
                return ("fold", ei.eid, ej.eid, ei.tgt, ej.tgt)
            if ei.tgt == ej.tgt:
                return ("fold", ei.eid, ej.eid, ei.src, ej.src)
    labels = log.label_set()
    deg = log.valency()
    for v in log.vertices:
        if deg[v] == 1 and v not in labels:
            eid = next(e.eid for e in log.edges if v in (e.src, e.tgt))
            return ("boundary", v, eid)
    return None


def apply_reduction_move(log: Log, move) -> Log:
    kind = move[0]
    if kind == "compress":
        _, eid, u, w = move
        return _merge_vertices(log, u, w, {eid})
    if kind == "fold":
        _, keep_eid, drop_eid, u, w = move
        return _merge_vertices(log, u, w, {drop_eid})
    if kind == "boundary":
        _, v, eid = move
        vertices = tuple(x for x in log.vertices if x != v)
        edges = tuple(e for e in log.edges if e.eid != eid)
        return Log(vertices, edges)
    raise ValueError(f"unknown move {move!r}")


def reduce_log(log: Log) -> tuple[Log, tuple]:
    """Apply moves to a fixed point; returns the reduced LOG and the move list.

    For LOF inputs the forest class is preserved.  The result satisfies the
    boundary/interior/compression conditions (injectivity is not a reduction
    target and may fail either way).
    """
    moves = []
    current = log
    while True:
        move = find_reduction_move(current)
        if move is None:
            return current, tuple(moves)
        nxt = apply_reduction_move(current, move)
        assert len(nxt.vertices) + len(nxt.edges) < len(current.vertices) + len(current.edges)
        moves.append(move)
        current = nxt


# ---------------------------------------------------------------------------
# reorientations


def reorient(log: Log, flips: Iterable[str]) -> Log:
    """Reverse the direction of the given edges; labels are untouched."""
    flipset = set(flips)
    known = {e.eid for e in log.edges}
    for eid in flipset:
        if eid not in known:
            raise ValueError(f"unknown edge id {eid!r}")
    edges = tuple(
        Edge(e.eid, e.tgt, e.src, e.lab) if e.eid in flipset else e for e in log.edges
    )
    return Log(log.vertices, edges)


def block_reorient(log: Log, labels: Iterable[str]) -> Log:
    """Reverse every edge whose label lies in the given set."""
    labset = set(labels)
    return reorient(log, {e.eid for e in log.edges if e.lab in labset})


def non_label_vertices(log: Log) -> tuple[str, ...]:
    """Vertices that never occur as an edge label, in declaration order."""
    labels = log.label_set()
    return tuple(v for v in log.vertices if v not in labels)


# ---------------------------------------------------------------------------
# sub-LOTs and quotients


@dataclass(frozen=True)
class SubLog:
    """A connected subtree closed under labels: lambda(E0) inside V0."""

    vertices: tuple[str, ...]
    edge_ids: tuple[str, ...]
    is_tree: bool
    is_boundary_reduced: bool


def _sublog_from_edges(log: Log, eids: Sequence[str]) -> SubLog:
    edges = [log.edge(eid) for eid in eids]
    vset = {v for e in edges for v in (e.src, e.tgt)}
    vertices = tuple(v for v in log.vertices if v in vset)
    labels_inside = {e.lab for e in edges}
    deg = {v: 0 for v in vertices}
    for e in edges:
        deg[e.src] += 1
        deg[e.tgt] += 1
    boundary_ok = all(deg[v] != 1 or v in labels_inside for v in vertices)
    order = {e.eid: i for i, e in enumerate(log.edges)}
    return SubLog(vertices, tuple(sorted(eids, key=order.__getitem__)), True, boundary_ok)


def enumerate_sub_lots(log: Log, max_size: Optional[int] = None) -> tuple[SubLog, ...]:
    """All connected subtrees with >= 1 edge whose labels stay inside them.

    Exhaustive up to max_size vertices (unbounded when absent).  When the
    whole graph is itself a tree closed under labels it is included.
    """
    edges = log.edges
    by_vertex: dict[str, list[int]] = {v: [] for v in log.vertices}
    for i, e in enumerate(edges):
        by_vertex[e.src].append(i)
        if e.tgt != e.src:
            by_vertex[e.tgt].append(i)

    seen: set[frozenset[int]] = set()
    found: list[tuple[int, ...]] = []

    for seed in range(len(edges)):
        e0 = edges[seed]
        if e0.src == e0.tgt:
            continue
        start = frozenset([seed])
        stack = [(start, frozenset((e0.src, e0.tgt)))]
        seen.add(start)
        while stack:
            eset, vset = stack.pop()
            if all(edges[i].lab in vset for i in eset):
                found.append(tuple(sorted(eset)))
            if max_size is not None and len(vset) >= max_size:
                continue
            for v in vset:
                for i in by_vertex[v]:
                    if i <= seed or i in eset:
                        continue
                    e = edges[i]
                    other = e.tgt if e.src == v else e.src
                    if other in vset or e.src == e.tgt:
                        continue  # would close a cycle
                    nxt = eset | {i}
                    fs = frozenset(nxt)
                    if fs not in seen:
                        seen.add(fs)
                        stack.append((fs, vset | {other}))

    found.sort(key=lambda t: (len(t), t))
    return tuple(_sublog_from_edges(log, [edges[i].eid for i in t]) for t in found)


def sub_log_as_log(log: Log, sub: SubLog) -> Log:
    """The sub-LOT as a standalone Log (vertex order inherited)."""
    return Log(sub.vertices, tuple(log.edge(eid) for eid in sub.edge_ids))


def validate_sub_lot(log: Log, sub: SubLog) -> None:
    eids = {e.eid for e in log.edges}
    if not sub.edge_ids:
        raise ValueError("sub-LOT must contain at least one edge")
    vset = set(sub.vertices)
    if not set(sub.vertices) <= set(log.vertices):
        raise ValueError("sub-LOT vertices not in parent")
    uf = _UnionFind(sub.vertices)
    acyclic = True
    for eid in sub.edge_ids:
        if eid not in eids:
            raise ValueError(f"sub-LOT edge {eid!r} not in parent")
        e = log.edge(eid)
        if e.src not in vset or e.tgt not in vset:
            raise ValueError(f"sub-LOT edge {eid!r} leaves the vertex set")
        if e.lab not in vset:
            raise ValueError(f"sub-LOT not closed under labels at edge {eid!r}")
        if not uf.union(e.src, e.tgt):
            acyclic = False
    components = len({uf.find(v) for v in sub.vertices})
    if not acyclic or components != 1:
        raise ValueError("sub-LOT is not a connected tree")


def quotient_lof(
    log: Log, parts: Sequence[SubLog], reps: Sequence[str]
) -> tuple[Log, dict[str, str], dict[str, str]]:
    """Collapse disjoint sub-LOTs to chosen representative vertices.

    Every surviving edge whose label lay in a collapsed part is relabeled with
    that part's representative.  Returns the quotient together with the vertex
    map and the restriction of that map to labels.
    """
    if len(parts) != len(reps):
        raise ValueError("one representative per part required")
    taken: set[str] = set()
    vmap = {v: v for v in log.vertices}
    removed_edges: set[str] = set()
    for sub, rep in zip(parts, reps):
        validate_sub_lot(log, sub)
        vset = set(sub.vertices)
        if taken & vset:
            raise ValueError("parts are not vertex-disjoint")
        if rep not in vset:
            raise ValueError(f"representative {rep!r} outside its part")
        taken |= vset
        for v in sub.vertices:
            vmap[v] = rep
        removed_edges |= set(sub.edge_ids)

    vertices = tuple(v for v in log.vertices if vmap[v] == v)
    edges = tuple(
        Edge(e.eid, vmap[e.src], vmap[e.tgt], vmap[e.lab])
        for e in log.edges
        if e.eid not in removed_edges
    )
    lmap = {e.lab: vmap[e.lab] for e in log.edges if e.eid not in removed_edges}
    return Log(vertices, edges), vmap, lmap


def restrict_log(log: Log, vertices: Iterable[str]) -> Log:
    """The full sub-LOG on a label-closed vertex subset."""
    vset = set(vertices)
    kept = tuple(v for v in log.vertices if v in vset)
    edges = tuple(
        e for e in log.edges if e.src in vset and e.tgt in vset and e.lab in vset
    )
    return Log(kept, edges)
