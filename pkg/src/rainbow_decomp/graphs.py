"""Edge-colored graphs: canonical representation, cuts, volumes, JSON I/O."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

Edge = tuple[int, int, int]
"""Canonical edge triple ``(u, v, color)`` with ``u < v``."""


class GraphError(ValueError):
    """Structurally invalid graph or malformed graph document."""


@dataclass(frozen=True)
class EdgeColoredGraph:
    """Simple undirected graph with an integer color on every edge.

    Vertices are ``0..n-1``.  ``edges`` must already be canonical: ``u < v``
    in every triple, triples sorted by endpoint pair, no loops, no parallel
    edges.  Color ids must be dense (``0..s-1``, every id used at least
    once).  Instances are immutable and safe to share across workers; use
    :func:`build_graph` to normalize raw input.
    """

    n: int
    edges: tuple[Edge, ...]
    s: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError("vertex count must be a positive integer")
        used: set[int] = set()
        prev_pair: tuple[int, int] | None = None
        deg = [0] * self.n
        neighbors: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, c in self.edges:
            if u == v:
                raise GraphError(f"loop edge at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{self.n - 1}")
            if prev_pair is not None and (u, v) <= prev_pair:
                raise GraphError("edges not in canonical sorted order, or duplicated")
            prev_pair = (u, v)
            if not (0 <= c < self.s):
                raise GraphError(f"color {c} outside dense range 0..{self.s - 1}")
            used.add(c)
            deg[u] += 1
            deg[v] += 1
            neighbors[u].append(v)
            neighbors[v].append(u)
        if len(used) != self.s:
            raise GraphError("color ids must be dense: every id in 0..s-1 in use")
        object.__setattr__(self, "_degrees", tuple(deg))
        object.__setattr__(self, "_neighbors", tuple(tuple(sorted(a)) for a in neighbors))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return self._degrees  # type: ignore[attr-defined]

    @property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return self._neighbors  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        return self._degrees[v]  # type: ignore[attr-defined]

    @property
    def min_degree(self) -> int:
        return min(self._degrees)  # type: ignore[attr-defined]

    def color_classes(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices grouped by color id, one tuple per color."""
        classes: list[list[int]] = [[] for _ in range(self.s)]
        for i, (_, _, c) in enumerate(self.edges):
            classes[c].append(i)
        return tuple(tuple(cl) for cl in classes)

    def color_class_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.s
        for _, _, c in self.edges:
            sizes[c] += 1
        return tuple(sizes)

    def neighbor_masks(self) -> list[int]:
        """Per-vertex adjacency as bitmasks, for subset-enumeration loops."""
        masks = [0] * self.n
        for u, v, _ in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks


@dataclass(frozen=True)
class VertexPartition:
    """Partition of ``0..n-1`` into nonempty, pairwise disjoint parts."""

    n: int
    parts: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for part in self.parts:
            if not part:
                raise ValueError("partition parts must be nonempty")
            if part & seen:
                raise ValueError("partition parts must be pairwise disjoint")
            seen |= part
        if seen != set(range(self.n)):
            raise ValueError(f"parts must cover exactly the vertices 0..{self.n - 1}")

    @property
    def t(self) -> int:
        return len(self.parts)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "VertexPartition":
        """Build from per-vertex part labels; parts ordered by first appearance."""
        order: dict[int, int] = {}
        groups: list[set[int]] = []
        for v, lab in enumerate(labels):
            if lab not in order:
                order[lab] = len(groups)
                groups.append(set())
            groups[order[lab]].add(v)
        return cls(n=len(labels), parts=tuple(frozenset(g) for g in groups))

    def labels(self) -> list[int]:
        out = [0] * self.n
        for i, part in enumerate(self.parts):
            for v in part:
                out[v] = i
        return out

    def part_sizes(self) -> list[int]:
        return [len(p) for p in self.parts]

    def as_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]


@dataclass(frozen=True)
class DegreeSummary:
    degrees: tuple[int, ...]
    delta: int
    volume: int


@dataclass(frozen=True)
class CutStats:
    subset: frozenset[int]
    cut_edges: int
    vol: int
    vol_complement: int


def build_graph(n: int, triples: Iterable[Sequence[int]]) -> EdgeColoredGraph:
    """Normalize raw ``(u, v, color)`` triples into an :class:`EdgeColoredGraph`.

    Endpoint order inside a triple is free; colors may be arbitrary integers
    and are re-indexed to dense ids in order of first appearance.  Edges come
    out sorted by endpoint pair.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError("vertex count must be an integer")
    color_map: dict[int, int] = {}
    seen_pairs: set[tuple[int, int]] = set()
    normalized: list[Edge] = []
    for item in triples:
        try:
            u, v, c = (int(item[0]), int(item[1]), int(item[2]))
        except (TypeError, ValueError, IndexError) as exc:
            raise GraphError(f"malformed edge entry {item!r}") from exc
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        a, b = (u, v) if u < v else (v, u)
        if not (0 <= a and b < n):
            raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        if (a, b) in seen_pairs:
            raise GraphError(f"duplicate edge ({a}, {b})")
        seen_pairs.add((a, b))
        if c not in color_map:
            color_map[c] = len(color_map)
        normalized.append((a, b, color_map[c]))
    normalized.sort(key=lambda e: (e[0], e[1]))
    return EdgeColoredGraph(n=n, edges=tuple(normalized), s=len(color_map))


def load_graph(document: str | bytes) -> EdgeColoredGraph:
    """Parse the JSON graph format ``{"n": int, "edges": [[u, v, color], ...]}``."""
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphError('graph document must be an object with "n" and "edges"')
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise GraphError('"edges" must be a list of [u, v, color] triples')
    return build_graph(obj["n"], edges)


def save_graph(g: EdgeColoredGraph) -> str:
    """Serialize canonically: edges sorted by endpoint pair (as stored)."""
    return json.dumps(
        {"n": g.n, "edges": [[u, v, c] for u, v, c in g.edges]},
        separators=(",", ":"),
    )


def degrees(g: EdgeColoredGraph) -> DegreeSummary:
    """Per-vertex degrees, the minimum degree delta, and Vol(G) = 2|E|."""
    return DegreeSummary(
        degrees=g.degree_sequence,
        delta=min(g.degree_sequence),
        volume=2 * g.num_edges,
    )


def volume(g: EdgeColoredGraph, vertices: Iterable[int]) -> int:
    return sum(g.degree(v) for v in vertices)


def cut(g: EdgeColoredGraph, subset: Iterable[int]) -> CutStats:
    """Crossing-edge count and volumes for a nonempty proper vertex subset."""
    sset = frozenset(subset)
    if not sset or len(sset) >= g.n:
        raise ValueError("cut requires a nonempty proper subset of the vertices")
    if any(not (0 <= v < g.n) for v in sset):
        raise ValueError("subset contains out-of-range vertices")
    crossing = sum(1 for u, v, _ in g.edges if (u in sset) != (v in sset))
    vol = volume(g, sset)
    return CutStats(
        subset=sset,
        cut_edges=crossing,
        vol=vol,
        vol_complement=2 * g.num_edges - vol,
    )


def colors_across(g: EdgeColoredGraph, partition: VertexPartition) -> int:
    """Number of distinct colors on edges whose endpoints lie in different parts."""
    if partition.n != g.n:
        raise ValueError("partition is over a different vertex set")
    labels = partition.labels()
    seen: set[int] = set()
    for u, v, c in g.edges:
        if labels[u] != labels[v]:
            seen.add(c)
    return len(seen)


def crossing_edges(g: EdgeColoredGraph, partition: VertexPartition) -> int:
    """Number of edges whose endpoints lie in different parts."""
    if partition.n != g.n:
        raise ValueError("partition is over a different vertex set")
    labels = partition.labels()
    return sum(1 for u, v, _ in g.edges if labels[u] != labels[v])


def connected_components(g: EdgeColoredGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: EdgeColoredGraph) -> bool:
    return len(connected_components(g)) == 1
