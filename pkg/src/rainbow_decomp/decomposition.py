"""Randomized edge decomposition into q parts with per-part rainbow spanning
tree extraction, plus checkers for every inequality the construction uses:
cut lower bounds, the small-part threshold M, the singleton-count profile x,
the partition crossing-edge bound, pseudocolor classes, and Chernoff tails."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .graphs import (
    EdgeColoredGraph,
    VertexPartition,
    crossing_edges,
    degrees,
    is_connected,
    volume,
)
from .rainbow import RainbowForest, max_rainbow_forest
from .seeding import mix_seed, rng_from
from .spectral import spectrum

INEQ_TOL = 1e-9
# window tolerance for placing z* in (1, M]; see singleton_profile
_XTOL = 1e-9
_VERIFY_SALT = 0x5A17


class DecompositionError(ValueError):
    """Input violates a precondition of the decomposition."""


class VacuousHypothesisError(DecompositionError):
    """The part count floor(delta*lambda1 / (C log n)) is zero, so the method
    promises nothing for this input."""


class DisconnectedGraphError(DecompositionError):
    """Spanning trees require a connected input."""


@dataclass(frozen=True)
class DecompositionParams:
    """Knobs for the randomized decomposition.

    C scales the minimum-degree requirement (natural log throughout);
    epsilon is the slack used by the per-part property checks and must lie
    in (0, 1/9).
    """

    C: float
    epsilon: float = 0.1
    seed: int = 0
    max_retries: int = 50

    def __post_init__(self) -> None:
        if not self.C > 0:
            raise ValueError("C must be positive")
        if not (0.0 < self.epsilon < 1.0 / 9.0):
            raise ValueError("epsilon must lie in (0, 1/9)")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")


def part_count_formula(delta: int, lam1: float, C: float, n: int) -> int:
    """floor(delta * lambda1 / (C * ln n)); 0 when n < 2."""
    if n < 2:
        return 0
    return int(math.floor(delta * lam1 / (C * math.log(n))))


def part_count(
    g: EdgeColoredGraph, params: DecompositionParams, lam1: float | None = None
) -> int:
    """Number of edge-disjoint parts the decomposition targets; 0 signals the
    hypothesis is vacuous for this input (e.g. disconnected, tiny, or C too
    large)."""
    if lam1 is None:
        lam1 = spectrum(g).lambda1
    return part_count_formula(degrees(g).delta, lam1, params.C, g.n)


def color_cap_ok(g: EdgeColoredGraph, lam1: float | None = None) -> bool:
    """True iff every color class has size at most delta * lambda1 / 2."""
    if g.num_edges == 0:
        return True
    if lam1 is None:
        lam1 = spectrum(g).lambda1
    cap = degrees(g).delta * lam1 / 2.0
    return max(g.color_class_sizes()) <= cap + INEQ_TOL


def random_edge_partition(
    g: EdgeColoredGraph, q: int, seed: int
) -> tuple[tuple[int, ...], ...]:
    """Assign every edge independently and uniformly to one of q parts.

    Returns q tuples of edge indices; their disjoint union is all of E(G).
    Reproducible from the seed.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    rng = rng_from(seed)
    assignment = rng.integers(0, q, size=g.num_edges)
    parts: list[list[int]] = [[] for _ in range(q)]
    for idx, j in enumerate(assignment):
        parts[int(j)].append(idx)
    return tuple(tuple(p) for p in parts)


@dataclass(frozen=True)
class PartsReport:
    """Per-part structural properties of an edge partition.

    Three checks per part j:
      color overlap: every color contributes at most (1+eps) * C * ln(n) / 2
        edges to the part;
      cut ratio: for vertex subsets S, the part keeps at least (1-eps) of the
        expected crossing edges e_G(S, S-bar) / q;
      min degree: every vertex keeps degree at least (1-eps) * C * ln(n).

    ``mode`` records whether the cut check enumerated all subsets
    ("exhaustive", n <= 18) or used a seeded sample plus all singletons
    ("sampled").  A worst ratio of None means no subset had crossing edges
    in the host graph, so the check was vacuous.
    """

    mode: str
    epsilon: float
    color_overlap_max: tuple[int, ...]
    color_overlap_cap: float
    min_degree: tuple[int, ...]
    min_degree_floor: float
    cut_ratio_worst: tuple[float | None, ...]
    cut_ratio_floor: float
    color_cap_holds: bool
    cut_ratio_holds: bool
    min_degree_holds: bool

    @property
    def all_hold(self) -> bool:
        return self.color_cap_holds and self.cut_ratio_holds and self.min_degree_holds


def verify_parts(
    g: EdgeColoredGraph,
    parts: tuple[tuple[int, ...], ...],
    params: DecompositionParams,
    *,
    exhaustive_limit: int = 18,
    sample_size: int = 10_000,
) -> PartsReport:
    """Check the three per-part properties for an edge partition of g.

    The expected crossing count is the exact e_G(S, S-bar) / q.  The subset
    ratio is identical for S and its complement, so enumerating one side of
    each subset/complement pair covers every subset with volume at most half
    the total.  Above ``exhaustive_limit`` vertices, a seeded random sample
    of ``sample_size`` subsets plus all singletons is used instead and the
    report is marked "sampled" (singletons are the case the min-degree check
    needs exactly, and they stay exact in both modes).
    """
    q = len(parts)
    if q < 1:
        raise ValueError("need at least one part")
    n = g.n
    logn = math.log(n) if n >= 2 else 0.0
    eps = params.epsilon
    overlap_cap = (1 + eps) * params.C * logn / 2.0
    degree_floor = (1 - eps) * params.C * logn
    ratio_floor = 1 - eps

    edges = g.edges
    overlap_max = []
    min_deg = []
    part_vertex_masks: list[list[int]] = []
    for part in parts:
        per_color: dict[int, int] = {}
        deg = [0] * n
        vmask = [0] * n
        for idx in part:
            u, v, c = edges[idx]
            per_color[c] = per_color.get(c, 0) + 1
            deg[u] += 1
            deg[v] += 1
            vmask[u] |= 1 << v
            vmask[v] |= 1 << u
        overlap_max.append(max(per_color.values()) if per_color else 0)
        min_deg.append(min(deg))
        part_vertex_masks.append(vmask)

    g_masks = g.neighbor_masks()
    full = (1 << n) - 1

    def cut_of(masks: list[int], smask: int) -> int:
        inv = full ^ smask
        total = 0
        rem = smask
        while rem:
            bit = rem & -rem
            rem ^= bit
            total += (masks[bit.bit_length() - 1] & inv).bit_count()
        return total

    if n <= exhaustive_limit:
        mode = "exhaustive"
        subset_masks: list[int] = [
            (low << 1) | 1 for low in range(0, (1 << (n - 1)) - 1)
        ]
    else:
        mode = "sampled"
        rng = rng_from(params.seed, _VERIFY_SALT)
        seen = set()
        for _ in range(sample_size):
            bits = rng.integers(0, 2, size=n)
            smask = 0
            for v in range(n):
                if bits[v]:
                    smask |= 1 << v
            if smask != 0 and smask != full:
                seen.add(smask)
        for v in range(n):
            seen.add(1 << v)
        subset_masks = sorted(seen)

    worst: list[float | None] = [None] * q
    for smask in subset_masks:
        base = cut_of(g_masks, smask)
        if base == 0:
            continue
        expected = base / q
        for j in range(q):
            ratio = cut_of(part_vertex_masks[j], smask) / expected
            if worst[j] is None or ratio < worst[j]:
                worst[j] = ratio

    color_ok = all(o <= overlap_cap + INEQ_TOL for o in overlap_max)
    degree_ok = all(d >= degree_floor - INEQ_TOL for d in min_deg)
    ratio_ok = all(w is None or w >= ratio_floor - INEQ_TOL for w in worst)
    return PartsReport(
        mode=mode,
        epsilon=eps,
        color_overlap_max=tuple(overlap_max),
        color_overlap_cap=overlap_cap,
        min_degree=tuple(min_deg),
        min_degree_floor=degree_floor,
        cut_ratio_worst=tuple(worst),
        cut_ratio_floor=ratio_floor,
        color_cap_holds=color_ok,
        cut_ratio_holds=ratio_ok,
        min_degree_holds=degree_ok,
    )


@dataclass(frozen=True)
class Decomposition:
    """Result of decompose(): q edge-disjoint parts covering E(G), the rainbow
    spanning tree found in each part (None where extraction fell short), the
    per-part maximum forest sizes, and how many seeded attempts were used."""

    q: int
    parts: tuple[tuple[int, ...], ...]
    trees: tuple[RainbowForest | None, ...]
    forest_sizes: tuple[int, ...]
    attempts: int
    success: bool
    checks: PartsReport | None = None


def decompose(
    g: EdgeColoredGraph,
    params: DecompositionParams,
    *,
    verify: bool = False,
    enforce_color_cap: bool = True,
) -> Decomposition:
    """Partition E(G) into q = floor(delta*lambda1/(C ln n)) random parts and
    extract one rainbow spanning tree per part.

    Retries with fresh derived seeds (up to ``params.max_retries`` extra
    attempts) until every part yields a spanning tree; returns the best
    attempt otherwise.  Trees from different parts are automatically
    edge-disjoint.  ``verify=True`` attaches the per-part property report for
    the returned partition.

    Raises:
        DisconnectedGraphError: no spanning tree can exist.
        DecompositionError: a color class exceeds delta*lambda1/2 and
            ``enforce_color_cap`` is set (pass False to warn and continue).
        VacuousHypothesisError: q = 0, nothing is promised for this input.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("input graph is disconnected")
    lam1 = spectrum(g).lambda1
    if not color_cap_ok(g, lam1):
        message = "a color class exceeds delta*lambda1/2"
        if enforce_color_cap:
            raise DecompositionError(message + " (pass enforce_color_cap=False to proceed)")
        warnings.warn(message + "; continuing anyway", stacklevel=2)
    q = part_count(g, params, lam1)
    if q == 0:
        raise VacuousHypothesisError(
            "hypothesis vacuous: floor(delta*lambda1/(C log n)) = 0"
        )

    best: tuple[int, tuple[tuple[int, ...], ...], tuple[RainbowForest, ...]] | None = None
    attempts = 0
    for attempt in range(params.max_retries + 1):
        attempts += 1
        parts = random_edge_partition(g, q, mix_seed(params.seed, attempt))
        forests = tuple(max_rainbow_forest(g, edge_subset=part) for part in parts)
        found = sum(1 for f in forests if f.spanning)
        if best is None or found > best[0]:
            best = (found, parts, forests)
        if found == q:
            break
    assert best is not None
    found, parts, forests = best
    checks = verify_parts(g, parts, params) if verify else None
    return Decomposition(
        q=q,
        parts=parts,
        trees=tuple(f if f.spanning else None for f in forests),
        forest_sizes=tuple(f.size for f in forests),
        attempts=attempts,
        success=(found == q),
        checks=checks,
    )


def cut_lower_bound(
    g: EdgeColoredGraph, subset: frozenset[int] | set[int], lam1: float | None = None
) -> float:
    """max of the spectral bound (lambda1/2) * Vol(S) and the clique-deficit
    bound Vol(S) - 2 * C(|S|, 2).

    The clique-deficit term undercounts e(S, S-bar) for every subset; the
    spectral term does so only when Vol(S) <= Vol(G)/2 (it is the smaller
    side's bound).
    """
    k = len(subset)
    if not (0 < k < g.n):
        raise ValueError("subset must be nonempty and proper")
    if lam1 is None:
        lam1 = spectrum(g).lambda1
    vol = volume(g, subset)
    return max(lam1 / 2.0 * vol, float(vol - k * (k - 1)))


def cut_lower_bound_size(delta: int, lam1: float, z: int) -> float:
    """Size-only variant: max(lambda1*delta*z/2, delta*z - z*(z-1)).

    Monotone substitution Vol(S) >= delta*|S| makes this at most
    cut_lower_bound for any subset of size z.
    """
    if z < 1:
        raise ValueError("z must be >= 1")
    return max(lam1 * delta * z / 2.0, float(delta * z - z * (z - 1)))


def small_part_threshold(delta: int, lam1: float) -> float:
    """The part-size threshold M = 1 + delta - lambda1*delta/2.

    For sizes s <= M the clique-deficit bound delta*s - s*(s-1) dominates the
    spectral bound lambda1*delta*s/2; M is the positive root of their
    equality delta*s - s*(s-1) = lambda1*delta*s/2.
    """
    if delta <= 0:
        raise ValueError("delta must be positive")
    if not (0 < lam1 <= 2 + INEQ_TOL):
        raise ValueError("lambda1 must lie in (0, 2]")
    return 1.0 + delta - lam1 * delta / 2.0


@dataclass(frozen=True)
class SingletonProfile:
    """Extremal rearrangement of the part sizes at or below M: x singletons,
    one part of size z_star in (1, M], and the rest of size exactly M, with
    count and total preserved.  t_prime is the number of sizes at or below M."""

    x: int
    z_star: float | None
    t_prime: int


def singleton_profile(sizes: list[int] | tuple[int, ...], M: float) -> SingletonProfile:
    """The unique integer x >= 0 and z_star in (1, M] with
    N' = x + M*(t' - x - 1) + z_star, where t' counts sizes at or below M and
    N' is their total.

    x is the singleton count of the rearrangement that concentrates the small
    sizes at the extremes; it feeds the partition crossing-edge bound.  The
    closed form floor((M*t' - N') / (M - 1)) is verified against the window
    constraint (shifted by 1e-9 at the ends) and nudged by one if float
    rounding put it outside.  Degenerate M <= 1 + 1e-9 (lambda1 at 2, a
    two-vertex graph) forces every small part to be a singleton: x = t'.

    Returns x = 0 with no z_star when no size is at or below M.
    """
    ss = sorted(int(z) for z in sizes)
    if not ss:
        raise ValueError("empty size list")
    if ss[0] < 1:
        raise ValueError("sizes must be positive integers")
    t_prime = 0
    n_prime = 0
    for z in ss:
        if z <= M + _XTOL:
            t_prime += 1
            n_prime += z
    if t_prime == 0:
        return SingletonProfile(x=0, z_star=None, t_prime=0)
    if M <= 1 + _XTOL:
        return SingletonProfile(x=t_prime, z_star=None, t_prime=t_prime)
    base = math.floor((M * t_prime - n_prime) / (M - 1))
    for x in (base - 1, base, base + 1):
        z_star = n_prime - x - M * (t_prime - x - 1)
        if 1 + _XTOL < z_star <= M + _XTOL:
            return SingletonProfile(x=int(x), z_star=float(z_star), t_prime=t_prime)
    raise ArithmeticError(
        f"no integer x placed z* inside (1, {M}]; sizes={ss[:8]}..., M={M}"
    )


@dataclass(frozen=True)
class CrossingBoundReport:
    """Evaluation of e_G(P) >= (lambda1*|E| + delta*x*(1 - lambda1/2)) / 2.

    ``degenerate`` marks single-part partitions (no crossing edges to bound).
    ``guaranteed`` is true when every part larger than M has volume at most
    Vol(G)/2; the inequality is a theorem exactly on those partitions, and
    can genuinely fail outside them (one dominant part plus a singleton
    already violates it on a complete graph).
    """

    t: int
    lhs: int
    rhs: float
    x: int
    M: float
    holds: bool
    degenerate: bool
    guaranteed: bool


def crossing_edges_bound(
    g: EdgeColoredGraph,
    partition: VertexPartition,
    lam1: float | None = None,
) -> CrossingBoundReport:
    """Compare the crossing-edge count of a vertex partition against the
    spectral lower bound with the singleton-count correction."""
    if lam1 is None:
        lam1 = spectrum(g).lambda1
    if lam1 <= 0:
        raise ValueError("bound requires a connected host graph (lambda1 > 0)")
    delta = degrees(g).delta
    m = g.num_edges
    M = small_part_threshold(delta, lam1)
    lhs = crossing_edges(g, partition)
    if partition.t == 1:
        return CrossingBoundReport(
            t=1, lhs=lhs, rhs=lam1 * m / 2.0, x=0, M=M,
            holds=False, degenerate=True, guaranteed=False,
        )
    profile = singleton_profile(partition.part_sizes(), M)
    rhs = 0.5 * (lam1 * m + delta * profile.x * (1 - lam1 / 2.0))
    total_vol = 2 * m
    guaranteed = all(
        2 * volume(g, part) <= total_vol
        for part in partition.parts
        if len(part) > M + _XTOL
    )
    return CrossingBoundReport(
        t=partition.t,
        lhs=lhs,
        rhs=rhs,
        x=profile.x,
        M=M,
        holds=lhs >= rhs - INEQ_TOL,
        degenerate=False,
        guaranteed=guaranteed,
    )


def crossing_edges_needed(t: int, n: int, params: DecompositionParams) -> float:
    """Crossing-edge count that forces at least t - 1 distinct crossing colors
    once every color contributes at most (1+eps)*C*ln(n)/2 crossing edges:
    (t-2)*(1+eps)*C*ln(n)/2 + 1."""
    if t < 2:
        raise ValueError("threshold needs at least two parts")
    if n < 2:
        raise ValueError("n must be >= 2")
    return (t - 2) * (1 + params.epsilon) * params.C * math.log(n) / 2.0 + 1.0


@dataclass(frozen=True)
class PseudocolorPartition:
    """n - 1 pairwise disjoint unions of whole color classes, each of total
    size at least n/4; ``leftover`` holds edges of colors never consumed."""

    classes: tuple[tuple[int, ...], ...]
    leftover: tuple[int, ...]


def pseudocolor_classes(g: EdgeColoredGraph) -> PseudocolorPartition:
    """Greedy merge of whole color classes, in color-id order, into n - 1
    groups of size at least n/4 each.

    Raises ValueError when |E| < (n-1)*n/4 (pigeonhole makes the target
    impossible) and also when the greedy run exhausts the colors early, which
    can happen despite enough total edges if one oversized class swallows
    most of them.
    """
    n = g.n
    needed = n - 1
    if 4 * g.num_edges < needed * n:
        raise ValueError(
            f"not enough edges: need |E| >= (n-1)*n/4 = {needed * n / 4}, have {g.num_edges}"
        )
    by_color = g.color_classes()
    classes: list[tuple[int, ...]] = []
    current: list[int] = []
    color = 0
    while color < g.s and len(classes) < needed:
        current.extend(by_color[color])
        color += 1
        if 4 * len(current) >= n:
            classes.append(tuple(current))
            current = []
    if len(classes) < needed:
        raise ValueError(
            f"colors exhausted after {len(classes)} groups of size >= {n}/4; need {needed}"
        )
    leftover = current + [idx for c in range(color, g.s) for idx in by_color[c]]
    return PseudocolorPartition(classes=tuple(classes), leftover=tuple(leftover))


@dataclass(frozen=True)
class ChernoffBounds:
    lower_tail: float
    upper_tail: float


def chernoff_tail_bounds(expectation: float, lam: float) -> ChernoffBounds:
    """Tail bounds for a sum of independent 0/1 variables with the given mean:
    P[X <= E - lam] <= exp(-lam^2 / (2E)) and
    P[X >= E + lam] <= exp(-lam^2 / (2(E + lam/3)))."""
    if expectation <= 0:
        raise ValueError("expectation must be positive")
    if lam < 0:
        raise ValueError("lam must be >= 0")
    return ChernoffBounds(
        lower_tail=math.exp(-lam * lam / (2.0 * expectation)),
        upper_tail=math.exp(-lam * lam / (2.0 * (expectation + lam / 3.0))),
    )
