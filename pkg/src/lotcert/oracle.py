"""Independent brute-force reference implementations and fixture generators.

Nothing here is a production path: these enumerations anchor the fast
implementations in the other modules (forest tests against explicit cycle
enumeration, max-flow cut checking against subset enumeration, the pipeline
sign choice against the full 2^n search) and generate reproducible random
fixtures.  Caps guard the exponential searches; LOT_ORACLE_CAP overrides
them globally.
"""

from __future__ import annotations

import heapq
import itertools
import os
import random
from dataclasses import dataclass
from typing import Iterable, Optional

from . import certify
from .arborescence import Branching, verify_branching
from .link_complex import MINUS, PLUS, Multigraph
from .log_model import Log, make_log, reducedness_report
from .selection import SelectionGraph

DEFAULT_LBF_CAP = 16
DEFAULT_BRANCHING_CAP = 20


class CapExceeded(RuntimeError):
    """An exhaustive search was asked to exceed its configured cap."""


def _cap(value: Optional[int], default: int) -> int:
    if value is not None:
        return value
    env = os.environ.get("LOT_ORACLE_CAP")
    return int(env) if env else default


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk; nodes has one more entry than edges (first == last)."""

    nodes: tuple
    edges: tuple
    classification: str  # "simple" | "reduced" | "homology_reduced"
    total_angle: Optional[int] = None


def cycle_total_angle(cycle: CycleWitness, angles) -> int:
    return sum(angles[k] for k in cycle.edges)


# ---------------------------------------------------------------------------
# cycle enumeration


def enumerate_simple_cycles(g: Multigraph, max_len: int) -> list[CycleWitness]:
    """All simple cycles with at most max_len edges, once up to rotation and
    reflection.  Loops are length-1 cycles, parallel pairs length-2 cycles.
    """
    index = {n: i for i, n in enumerate(g.nodes)}
    adj: dict = {n: [] for n in g.nodes}
    for key, u, v in g.edges:
        adj[u].append((key, v))
        if u != v:
            adj[v].append((key, u))

    out: list[CycleWitness] = []

    if max_len >= 1:
        for key, u, v in g.edges:
            if u == v:
                out.append(CycleWitness((u, u), (key,), "simple"))

    if max_len >= 2:
        by_pair: dict = {}
        for key, u, v in g.edges:
            if u == v:
                continue
            pair = (min(index[u], index[v]), max(index[u], index[v]))
            by_pair.setdefault(pair, []).append((key, u, v))
        for (iu, iv), bundle in sorted(by_pair.items()):
            for (k1, u, v), (k2, _, _) in itertools.combinations(bundle, 2):
                out.append(CycleWitness((u, v, u), (k1, k2), "simple"))

    if max_len >= 3:
        for start in g.nodes:
            s = index[start]
            # paths start at the cycle's minimal vertex; reflection is fixed by
            # requiring the first inner vertex to precede the last one.
            stack = [(start, (start,), ())]
            while stack:
                node, path_nodes, path_keys = stack.pop()
                for key, nxt in adj[node]:
                    if key in path_keys:
                        continue
                    if nxt == start:
                        if len(path_keys) + 1 >= 3 and index[path_nodes[1]] < index[node]:
                            out.append(
                                CycleWitness(path_nodes + (start,), path_keys + (key,), "simple")
                            )
                        continue
                    if index[nxt] <= s or nxt in path_nodes:
                        continue
                    if len(path_keys) + 1 >= max_len:
                        continue
                    stack.append((nxt, path_nodes + (nxt,), path_keys + (key,)))

    out.sort(key=lambda c: (len(c.edges), c.edges))
    return out


def homology_reduced_cycle_search(
    g: Multigraph, avoid: Iterable, max_len: Optional[int] = None
) -> Optional[CycleWitness]:
    """A homology reduced closed walk using an edge outside `avoid`, if any.

    Backtracking over edge traversals that never uses an edge twice (which in
    particular never uses both orientations); any homology reduced witness
    decomposes into simple cycles, so this restriction loses nothing.
    """
    avoid_set = set(avoid)
    limit = max_len if max_len is not None else 2 * len(g.edges)
    adj: dict = {n: [] for n in g.nodes}
    for key, u, v in g.edges:
        adj[u].append((key, v))
        if u != v:
            adj[v].append((key, u))

    for key0, u0, v0 in g.edges:
        if key0 in avoid_set:
            continue
        if u0 == v0:
            return CycleWitness((u0, u0), (key0,), "homology_reduced")
        stack = [(v0, (u0, v0), (key0,))]
        while stack:
            node, path_nodes, path_keys = stack.pop()
            for key, nxt in adj[node]:
                if key in path_keys:
                    continue
                if nxt == u0:
                    return CycleWitness(
                        path_nodes + (u0,), path_keys + (key,), "homology_reduced"
                    )
                if len(path_keys) + 1 < limit:
                    stack.append((nxt, path_nodes + (nxt,), path_keys + (key,)))
    return None


# ---------------------------------------------------------------------------
# exhaustive searches


def exhaustive_lbf_search(log: Log, cap: Optional[int] = None) -> list[dict]:
    """All sign assignments whose two induced link subgraphs are forests."""
    n = len(log.vertices)
    if n > _cap(cap, DEFAULT_LBF_CAP):
        raise CapExceeded(f"{n} vertices exceed the sign-search cap")
    hits = []
    for signs in itertools.product((PLUS, MINUS), repeat=n):
        eps = dict(zip(log.vertices, signs))
        if certify.lbf_check(log, eps).ok:
            hits.append(eps)
    return hits


def exhaustive_branching_search(
    sel: SelectionGraph, root: str, cap: Optional[int] = None
) -> Optional[tuple[Branching, Branching]]:
    """Brute-force disjoint branching pair: every vertex except the root picks
    two distinct incoming arcs, one per branching; both picks must be
    arborescences.  Returns the first valid pair in arc order, or None.
    """
    if len(sel.arcs) > _cap(cap, DEFAULT_BRANCHING_CAP):
        raise CapExceeded(f"{len(sel.arcs)} arcs exceed the branching-search cap")
    others = [v for v in sel.nodes if v != root]
    incoming = {v: [a.key for a in sel.arcs if a.dst == v] for v in others}
    if any(len(incoming[v]) < 2 for v in others):
        return None
    choices = [
        [(k1, k2) for k1 in incoming[v] for k2 in incoming[v] if k1 != k2]
        for v in others
    ]
    for combo in itertools.product(*choices):
        b1 = Branching(root, tuple(c[0] for c in combo))
        if not verify_branching(sel, b1)[0]:
            continue
        b2 = Branching(root, tuple(c[1] for c in combo))
        if verify_branching(sel, b2)[0]:
            return b1, b2
    return None


# ---------------------------------------------------------------------------
# fixture generators


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform labeled tree on 0..n-1 via a random Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def _vertex_names(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)]


def random_reduced_injective_lot(n: int, seed: int, max_tries: int = 2000) -> Log:
    """A random reduced injective LOT on n >= 3 vertices, deterministic per seed.

    Random tree, random edge orientations, and a random injective compressed
    labeling; attempts failing a reducedness condition are rejected and
    retried (a bounded number of times).
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = random.Random(f"lot:{n}:{seed}")
    names = _vertex_names(n)
    for _ in range(max_tries):
        tree = _random_tree_edges(n, rng)
        oriented = [(u, v) if rng.random() < 0.5 else (v, u) for u, v in tree]
        label_pool = list(range(n))
        rng.shuffle(label_pool)
        labels = label_pool[: n - 1]
        if any(lab in (u, v) for (u, v), lab in zip(oriented, labels)):
            continue  # not compressed; resample
        log = make_log(
            names,
            [
                (f"e{i + 1}", names[u], names[v], names[lab])
                for i, ((u, v), lab) in enumerate(zip(oriented, labels))
            ],
        )
        if reducedness_report(log).reduced:
            return log
    raise RuntimeError(f"no reduced injective LOT found for n={n}, seed={seed}")


def random_log(n: int, m: int, seed: int) -> Log:
    """An arbitrary random LOG with n vertices and m edges (test corpus)."""
    rng = random.Random(f"log:{n}:{m}:{seed}")
    names = _vertex_names(n)
    edges = []
    for i in range(m):
        u, v, lab = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        edges.append((f"e{i + 1}", names[u], names[v], names[lab]))
    return make_log(names, edges)


def random_lof(n: int, seed: int, split_chance: float = 0.25) -> Log:
    """A random LOF: forest underlying graph, arbitrary labels (test corpus)."""
    rng = random.Random(f"lof:{n}:{seed}")
    names = _vertex_names(n)
    edges = []
    k = 0
    for i in range(1, n):
        if rng.random() < split_chance:
            continue  # start a new component
        parent = rng.randrange(i)
        u, v = (parent, i) if rng.random() < 0.5 else (i, parent)
        k += 1
        edges.append((f"e{k}", names[u], names[v], names[rng.randrange(n)]))
    return make_log(names, edges)
