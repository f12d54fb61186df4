"""Maximum rainbow forests via matroid intersection, plus a brute-force
partition-criterion oracle for rainbow-spanning-tree existence."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import EdgeColoredGraph, VertexPartition
from .partitions import iter_rgs


@dataclass(frozen=True)
class RainbowForest:
    """Acyclic, color-distinct edge subset of a host graph.

    ``edge_indices`` point into the host graph's canonical edge list.
    ``spanning`` is true exactly when the forest has n - 1 edges; an acyclic
    set of that size is automatically connected, hence a spanning tree.
    """

    edge_indices: tuple[int, ...]
    spanning: bool

    @property
    def size(self) -> int:
        return len(self.edge_indices)


@dataclass(frozen=True)
class SchrijverVerdict:
    """Outcome of the partition criterion: a rainbow spanning tree exists iff
    every partition into t parts sees at least t - 1 distinct crossing colors."""

    has_rst: bool
    violating_partition: VertexPartition | None

    def __post_init__(self) -> None:
        if self.has_rst and self.violating_partition is not None:
            raise ValueError("positive verdict cannot carry a violating partition")
        if not self.has_rst and self.violating_partition is None:
            raise ValueError("negative verdict must carry a violating partition")


def max_rainbow_forest(
    g: EdgeColoredGraph, edge_subset: Iterable[int] | None = None
) -> RainbowForest:
    """Maximum-cardinality edge set that is simultaneously acyclic and uses
    every color at most once (graphic matroid meets color partition matroid).

    Runs the standard exchange-graph scheme: repeatedly augment the current
    common independent set along a shortest alternating path.  Paths are
    discovered breadth-first with lowest-edge-index preference, so the result
    is deterministic.  ``edge_subset`` restricts the ground set (used for the
    per-part extraction in decompositions); indices always refer to ``g``.
    """
    if edge_subset is None:
        ground = list(range(g.num_edges))
    else:
        ground = sorted(set(int(i) for i in edge_subset))
        if ground and not (0 <= ground[0] and ground[-1] < g.num_edges):
            raise ValueError("edge_subset contains out-of-range edge indices")
    chosen = _max_common_independent(g, ground)
    return RainbowForest(
        edge_indices=tuple(sorted(chosen)),
        spanning=(len(chosen) == g.n - 1),
    )


def _max_common_independent(g: EdgeColoredGraph, ground: list[int]) -> set[int]:
    current: set[int] = set()
    while True:
        path = _augmenting_path(g, ground, current)
        if path is None:
            return current
        for i, e in enumerate(path):
            if i % 2 == 0:
                current.add(e)
            else:
                current.remove(e)


def _augmenting_path(
    g: EdgeColoredGraph, ground: list[int], members: set[int]
) -> list[int] | None:
    """Shortest alternating path from the acyclic-addable edges to the
    color-free edges in the exchange digraph, or None when ``members`` is
    already maximum."""
    edges = g.edges
    outside = [e for e in ground if e not in members]

    # forest structure of the current set
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in members:
        u, v, _ = edges[e]
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    comp = _forest_components(g.n, adj)
    color_owner = {edges[e][2]: e for e in members}

    sources: list[int] = []
    sinks: set[int] = set()
    arcs_from_member: dict[int, list[int]] = {e: [] for e in members}
    arc_to_member: dict[int, int] = {}
    for x in outside:
        u, v, c = edges[x]
        if comp[u] != comp[v]:
            sources.append(x)
        else:
            for y in _forest_path_edges(adj, u, v):
                arcs_from_member[y].append(x)
        if c in color_owner:
            arc_to_member[x] = color_owner[c]
        else:
            sinks.add(x)

    parent: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for x in sources:
        parent[x] = None
        queue.append(x)
    while queue:
        node = queue.popleft()
        if node in sinks:
            path = [node]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])  # type: ignore[arg-type]
            path.reverse()
            return path
        if node in members:
            nxts: Sequence[int] = arcs_from_member[node]
        else:
            y = arc_to_member.get(node)
            nxts = (y,) if y is not None else ()
        for nxt in nxts:
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    return None


def _forest_components(n: int, adj: dict[int, list[tuple[int, int]]]) -> list[int]:
    comp = [-1] * n
    cid = 0
    for start in range(n):
        if comp[start] != -1:
            continue
        stack = [start]
        comp[start] = cid
        while stack:
            v = stack.pop()
            for w, _ in adj.get(v, ()):
                if comp[w] == -1:
                    comp[w] = cid
                    stack.append(w)
        cid += 1
    return comp


def _forest_path_edges(
    adj: dict[int, list[tuple[int, int]]], u: int, v: int
) -> list[int]:
    """Edge ids on the unique forest path between u and v (assumed connected)."""
    prev: dict[int, tuple[int, int]] = {u: (-1, -1)}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            break
        for x, e in adj.get(w, ()):
            if x not in prev:
                prev[x] = (w, e)
                queue.append(x)
    out = []
    w = v
    while w != u:
        w, e = prev[w]
        out.append(e)
    return out


def has_rainbow_spanning_tree(g: EdgeColoredGraph) -> bool:
    return max_rainbow_forest(g).spanning


def is_rainbow_forest(g: EdgeColoredGraph, edge_indices: Iterable[int]) -> bool:
    """Independent re-check: acyclic by union-find replay, colors distinct."""
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    seen_colors: set[int] = set()
    for idx in edge_indices:
        u, v, c = g.edges[idx]
        if c in seen_colors:
            return False
        seen_colors.add(c)
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def schrijver_bruteforce(
    g: EdgeColoredGraph, *, max_vertices: int = 10
) -> SchrijverVerdict:
    """Decide rainbow-spanning-tree existence by enumerating every vertex
    partition (restricted-growth order) and counting distinct crossing colors.

    Returns the first violating partition in canonical enumeration order when
    the criterion fails.  Bell(n) partitions are enumerated, hence the cap.
    """
    if g.n > max_vertices:
        raise ValueError(f"partition enumeration infeasible: n={g.n} above cap {max_vertices}")
    edges = g.edges
    for labels in iter_rgs(g.n):
        t = max(labels) + 1
        if t == 1:
            continue
        needed = t - 1
        crossing_colors: set[int] = set()
        for u, v, c in edges:
            if labels[u] != labels[v] and c not in crossing_colors:
                crossing_colors.add(c)
                if len(crossing_colors) >= needed:
                    break
        if len(crossing_colors) < needed:
            return SchrijverVerdict(
                has_rst=False,
                violating_partition=VertexPartition.from_labels(labels),
            )
    return SchrijverVerdict(has_rst=True, violating_partition=None)


def peel_disjoint_trees(g: EdgeColoredGraph, k: int) -> list[RainbowForest]:
    """Up to k pairwise edge-disjoint rainbow spanning trees by greedy peeling:
    extract a maximum rainbow forest, keep it if it spans, delete its edges,
    repeat.  A shorter list signals exhaustion.

    Greedy extraction makes no optimality claim: the deterministic
    lowest-index preference hoards the earliest vertices' edges, so instances
    with several disjoint trees can still peel only one.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    remaining = list(range(g.num_edges))
    out: list[RainbowForest] = []
    for _ in range(k):
        forest = max_rainbow_forest(g, edge_subset=remaining)
        if not forest.spanning:
            break
        out.append(forest)
        used = set(forest.edge_indices)
        remaining = [e for e in remaining if e not in used]
    return out
