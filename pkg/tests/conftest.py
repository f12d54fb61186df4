"""Shared test helpers: seeded random graph builders, hypothesis strategy."""

from __future__ import annotations

import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rainbow_decomp.graphs import EdgeColoredGraph, build_graph

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def random_graph(
    rng: np.random.Generator,
    n: int,
    p: float | None = None,
    num_colors: int | None = None,
) -> EdgeColoredGraph:
    """Random graph on n vertices, not necessarily connected; random color
    multiplicities (num_colors=None draws a cap anywhere in 1..|E|)."""
    if p is None:
        p = float(rng.uniform(0.1, 0.9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    if num_colors is None:
        num_colors = int(rng.integers(1, max(2, len(pairs) + 1)))
    triples = [(u, v, int(rng.integers(0, num_colors))) for u, v in pairs]
    return build_graph(n, triples)


def random_connected_graph(
    rng: np.random.Generator,
    n: int,
    p: float | None = None,
    num_colors: int | None = None,
) -> EdgeColoredGraph:
    """Random connected graph: random recursive tree plus density-p extras."""
    if p is None:
        p = float(rng.uniform(0.1, 0.8))
    perm = [int(v) for v in rng.permutation(n)]
    pairs = set()
    for i in range(1, n):
        a, b = perm[int(rng.integers(0, i))], perm[i]
        pairs.add((min(a, b), max(a, b)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in pairs and rng.random() < p:
                pairs.add((u, v))
    if num_colors is None:
        num_colors = int(rng.integers(1, len(pairs) + 1))
    triples = [(u, v, int(rng.integers(0, num_colors))) for u, v in sorted(pairs)]
    return build_graph(n, triples)


@st.composite
def graphs_st(draw, min_n: int = 2, max_n: int = 7, max_colors: int = 6):
    n = draw(st.integers(min_n, max_n))
    triples = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                triples.append((u, v, draw(st.integers(0, max_colors - 1))))
    return build_graph(n, triples)
