"""Batch experiment driver: seeded decomposition trials over generated graph
families, with deterministic CSV/JSON emission."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .decomposition import DecompositionError, DecompositionParams, decompose
from .generators import (
    color_one_factorization,
    color_rainbow,
    color_random_bounded,
    gen_chung_lu,
    gen_complete,
    gen_complete_bipartite,
    gen_random_regular,
)
from .graphs import EdgeColoredGraph, degrees
from .seeding import mix_seed
from .spectral import spectrum

_FAMILIES = ("complete", "bipartite", "regular", "chunglu")
_COLORINGS = ("rainbow", "factorization", "bounded")


class SpecError(ValueError):
    """Experiment spec fails validation."""


@dataclass(frozen=True)
class ExperimentSpec:
    """One batch of decomposition trials on a generated family.

    ``family_params`` carries the dims per family: {"n"} for complete,
    {"a", "b"} for bipartite, {"n", "d"} for regular, {"w": [...]} for
    chunglu.  ``coloring_params`` holds {"max_class_size", "num_colors"} for
    the bounded coloring.  Per-trial seeds derive deterministically from
    ``seed`` and the trial index.
    """

    family: str
    family_params: dict
    C: float
    trials: int
    seed: int
    coloring: str = "rainbow"
    coloring_params: dict = field(default_factory=dict)
    epsilon: float = 0.1
    max_retries: int = 50
    verify_parts: bool = False
    output_csv: str | None = None
    output_summary: str | None = None

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise SpecError(f"unknown family {self.family!r}; expected one of {_FAMILIES}")
        if self.coloring not in _COLORINGS:
            raise SpecError(f"unknown coloring {self.coloring!r}; expected one of {_COLORINGS}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise SpecError("trials must be a positive integer")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise SpecError("seed must be a non-negative integer")
        try:
            DecompositionParams(
                C=self.C, epsilon=self.epsilon, seed=self.seed, max_retries=self.max_retries
            )
        except ValueError as exc:
            raise SpecError(str(exc)) from exc
        _require_dims(self.family, self.family_params)
        if self.coloring == "bounded":
            for key in ("max_class_size", "num_colors"):
                if not isinstance(self.coloring_params.get(key), int):
                    raise SpecError(f"bounded coloring needs integer {key!r}")


def _require_dims(family: str, params: dict) -> None:
    wanted = {
        "complete": ("n",),
        "bipartite": ("a", "b"),
        "regular": ("n", "d"),
        "chunglu": ("w",),
    }[family]
    for key in wanted:
        if key not in params:
            raise SpecError(f"family {family!r} needs parameter {key!r}")
    if family == "chunglu":
        w = params["w"]
        if not isinstance(w, list) or not w or not all(
            isinstance(x, (int, float)) and x > 0 for x in w
        ):
            raise SpecError("chunglu weights must be a nonempty list of positive numbers")
    else:
        for key in wanted:
            if not isinstance(params[key], int) or params[key] < 0:
                raise SpecError(f"family parameter {key!r} must be a non-negative integer")


def load_spec(document: str | bytes) -> ExperimentSpec:
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SpecError(f"malformed spec document: {exc}") from exc
    if not isinstance(obj, dict):
        raise SpecError("spec document must be a JSON object")
    known = {f.name for f in ExperimentSpec.__dataclass_fields__.values()}  # type: ignore[attr-defined]
    unknown = set(obj) - known
    if unknown:
        raise SpecError(f"unknown spec keys: {sorted(unknown)}")
    try:
        return ExperimentSpec(**obj)
    except TypeError as exc:
        raise SpecError(str(exc)) from exc


@dataclass(frozen=True)
class TrialRecord:
    """One decomposition trial.  q = 0 rows mark inputs where the hypothesis
    was vacuous (disconnected, oversized colors, or the floor hit zero).
    The lemma4_* columns are None unless the spec asked for part checks."""

    trial: int
    seed: int
    n: int
    delta: int
    lambda1: float
    q: int
    trees_found: int
    retries_used: int
    lemma4_color_cap: bool | None
    lemma4_cut_ratio: bool | None
    lemma4_min_degree: bool | None
    wall_time_s: float


def _build_instance(spec: ExperimentSpec, trial_seed: int) -> EdgeColoredGraph:
    fp = spec.family_params
    if spec.family == "complete":
        g = gen_complete(fp["n"])
    elif spec.family == "bipartite":
        g = gen_complete_bipartite(fp["a"], fp["b"])
    elif spec.family == "regular":
        g = gen_random_regular(fp["n"], fp["d"], seed=trial_seed)
    else:
        g = gen_chung_lu(fp["w"], seed=trial_seed)
    if spec.coloring == "rainbow":
        return color_rainbow(g)
    if spec.coloring == "factorization":
        return color_one_factorization(g)
    cp = spec.coloring_params
    return color_random_bounded(
        g, cp["max_class_size"], cp["num_colors"], seed=mix_seed(trial_seed, 1)
    )


def run_trial(spec: ExperimentSpec, trial: int) -> TrialRecord:
    started = time.perf_counter()
    trial_seed = mix_seed(spec.seed, trial)
    g = _build_instance(spec, trial_seed)
    lam1 = spectrum(g).lambda1
    delta = degrees(g).delta
    params = DecompositionParams(
        C=spec.C, epsilon=spec.epsilon, seed=trial_seed, max_retries=spec.max_retries
    )
    q = trees_found = retries = 0
    checks = None
    try:
        result = decompose(g, params, verify=spec.verify_parts)
        q = result.q
        trees_found = sum(1 for t in result.trees if t is not None)
        retries = result.attempts - 1
        checks = result.checks
    except DecompositionError:
        pass
    return TrialRecord(
        trial=trial,
        seed=trial_seed,
        n=g.n,
        delta=delta,
        lambda1=float(lam1),
        q=q,
        trees_found=trees_found,
        retries_used=retries,
        lemma4_color_cap=None if checks is None else checks.color_cap_holds,
        lemma4_cut_ratio=None if checks is None else checks.cut_ratio_holds,
        lemma4_min_degree=None if checks is None else checks.min_degree_holds,
        wall_time_s=time.perf_counter() - started,
    )


def run_experiment(
    spec: ExperimentSpec, *, workers: int = 1
) -> tuple[list[TrialRecord], dict]:
    """Run every trial (optionally across processes), sorted by trial index so
    emitted files are identical regardless of scheduling."""
    indices = list(range(spec.trials))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_trial, [spec] * len(indices), indices))
    else:
        records = [run_trial(spec, i) for i in indices]
    records.sort(key=lambda r: r.trial)
    return records, summarize(records)


def summarize(records: list[TrialRecord]) -> dict:
    """Success rate over trials with q > 0 (None when every trial was
    vacuous), the distribution of trees found, and mean lambda1."""
    eligible = [r for r in records if r.q > 0]
    successes = sum(1 for r in eligible if r.trees_found == r.q)
    distribution: dict[str, int] = {}
    for r in records:
        key = str(r.trees_found)
        distribution[key] = distribution.get(key, 0) + 1
    return {
        "trials": len(records),
        "vacuous_trials": len(records) - len(eligible),
        "success_rate": (successes / len(eligible)) if eligible else None,
        "trees_found_distribution": dict(sorted(distribution.items())),
        "mean_lambda1": (
            sum(r.lambda1 for r in records) / len(records) if records else None
        ),
        "mean_retries": (
            sum(r.retries_used for r in eligible) / len(eligible) if eligible else None
        ),
    }


CSV_COLUMNS = (
    "trial",
    "seed",
    "n",
    "delta",
    "lambda1",
    "q",
    "trees_found",
    "retries_used",
    "lemma4_color_cap",
    "lemma4_cut_ratio",
    "lemma4_min_degree",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_csv(records: list[TrialRecord], *, include_timing: bool = False) -> str:
    """One row per trial, stable column order.

    Wall times vary between runs, so the timing column is opt-in; the default
    output is byte-identical across repeated runs of the same spec.
    """
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    columns = CSV_COLUMNS + (("wall_time_s",) if include_timing else ())
    writer.writerow(columns)
    for r in records:
        row = [_cell(getattr(r, col)) for col in columns]
        writer.writerow(row)
    return buf.getvalue()


def emit_json(summary: dict) -> str:
    return json.dumps(summary, sort_keys=True, indent=2) + "\n"
