"""Graph families and colorings: complete, complete bipartite, random regular,
expected-degree random graphs; matching decompositions and capped colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import EdgeColoredGraph, build_graph
from .seeding import rng_from


def gen_complete(n: int) -> EdgeColoredGraph:
    """Complete graph on n vertices, every edge its own color."""
    if n < 1:
        raise ValueError("n must be >= 1")
    triples = []
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            triples.append((u, v, idx))
            idx += 1
    return build_graph(n, triples)


def gen_complete_bipartite(a: int, b: int) -> EdgeColoredGraph:
    """Complete bipartite graph with sides {0..a-1} and {a..a+b-1}, rainbow."""
    if a < 1 or b < 1:
        raise ValueError("both sides must have at least one vertex")
    triples = []
    idx = 0
    for u in range(a):
        for v in range(a, a + b):
            triples.append((u, v, idx))
            idx += 1
    return build_graph(a + b, triples)


def gen_random_regular(
    n: int, d: int, seed: int, *, max_restarts: int = 200
) -> EdgeColoredGraph:
    """Random d-regular simple graph by stub pairing, rainbow-colored.

    Shuffles the degree stubs and keeps conflict-free pairs, then reshuffles
    only the leftover stubs; a full restart happens when the leftovers cannot
    be completed.  (Restarting on every collision would be hopeless beyond
    small d: the probability a raw pairing is simple decays like
    exp(-(d*d - 1)/4).)  The resulting distribution is asymptotically, not
    exactly, uniform over simple d-regular graphs.
    """
    if d < 0 or d >= max(n, 1):
        raise ValueError("need 0 <= d < n")
    if (n * d) % 2 != 0:
        raise ValueError("n * d must be even")
    rng = rng_from(seed)
    if d == 0:
        return build_graph(n, [])
    for _ in range(max_restarts):
        pairs = _try_stub_pairing(n, d, rng)
        if pairs is not None:
            return build_graph(n, [(u, v, i) for i, (u, v) in enumerate(sorted(pairs))])
    raise RuntimeError(f"no simple pairing found after {max_restarts} restarts")


def _try_stub_pairing(n, d, rng):
    edges: set[tuple[int, int]] = set()
    stubs = list(range(n)) * d
    while stubs:
        rng.shuffle(stubs)
        leftovers: list[int] = []
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftovers.extend((s1, s2))
        if leftovers and not _has_suitable_pair(edges, leftovers):
            return None
        stubs = leftovers
    return edges


def _has_suitable_pair(edges, leftovers):
    distinct = sorted(set(leftovers))
    for i, s1 in enumerate(distinct):
        for s2 in distinct[i + 1 :]:
            if (s1, s2) not in edges:
                return True
    return False


@dataclass(frozen=True)
class WeightSequence:
    """Expected-degree weights; the pair {i, j} gets probability w_i*w_j*rho
    with rho = 1/sum(w), so every pairwise product must stay at most 1/rho."""

    w: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.w:
            raise ValueError("weight sequence must be nonempty")
        if any(x <= 0 for x in self.w):
            raise ValueError("weights must be positive")
        if len(self.w) >= 2:
            top = sorted(self.w)[-2:]
            if top[0] * top[1] * self.rho > 1 + 1e-12:
                raise ValueError("largest weight pair gives an edge probability above 1")

    @property
    def rho(self) -> float:
        return 1.0 / sum(self.w)

    @property
    def n(self) -> int:
        return len(self.w)


def gen_chung_lu(
    weights: WeightSequence | Sequence[float], seed: int
) -> EdgeColoredGraph:
    """Random graph with expected degrees: pair {i, j} appears independently
    with probability w_i*w_j*rho, rainbow-colored.

    Loops are never generated (only i < j pairs are sampled), so the realized
    expected degree of vertex i is w_i - w_i^2*rho rather than w_i.
    """
    ws = weights if isinstance(weights, WeightSequence) else WeightSequence(tuple(float(x) for x in weights))
    rng = rng_from(seed)
    rho = ws.rho
    n = ws.n
    triples = []
    idx = 0
    for i in range(n):
        if i + 1 >= n:
            break
        draws = rng.random(n - i - 1)
        for off, r in enumerate(draws):
            j = i + 1 + off
            if r < ws.w[i] * ws.w[j] * rho:
                triples.append((i, j, idx))
                idx += 1
    return build_graph(n, triples)


def color_rainbow(g: EdgeColoredGraph) -> EdgeColoredGraph:
    """Give every edge its own color."""
    return build_graph(g.n, [(u, v, i) for i, (u, v, _) in enumerate(g.edges)])


def color_one_factorization(g: EdgeColoredGraph) -> EdgeColoredGraph:
    """Proper coloring of a complete graph on an even number of vertices into
    n - 1 perfect matchings (round-robin rotation with vertex n-1 fixed)."""
    n = g.n
    if n < 2 or n % 2 != 0:
        raise ValueError("one-factorization needs an even number of vertices")
    if g.num_edges != n * (n - 1) // 2:
        raise ValueError("one-factorization needs a complete graph")
    rounds = n - 1
    triples = []
    for r in range(rounds):
        triples.append((r, n - 1, r))
        for k in range(1, n // 2):
            a = (r + k) % rounds
            b = (r - k) % rounds
            triples.append((a, b, r))
    return build_graph(n, triples)


def color_random_bounded(
    g: EdgeColoredGraph, max_class_size: int, num_colors: int, seed: int
) -> EdgeColoredGraph:
    """Random coloring in which no color class exceeds ``max_class_size``.

    Rejection-free: shuffle the edges, deal them round-robin over the colors;
    the fullest bucket then holds ceil(|E|/num_colors) <= max_class_size
    edges.  Unused colors disappear in the dense re-indexing.
    """
    if max_class_size < 1 or num_colors < 1:
        raise ValueError("max_class_size and num_colors must be >= 1")
    if num_colors * max_class_size < g.num_edges:
        raise ValueError("num_colors * max_class_size must cover every edge")
    rng = rng_from(seed)
    order = rng.permutation(g.num_edges)
    triples = []
    for pos, edge_idx in enumerate(order):
        u, v, _ = g.edges[int(edge_idx)]
        triples.append((u, v, pos % num_colors))
    return build_graph(g.n, triples)
