"""Seeded random instances and the experiment harness.

Every instance draws from its own generator seeded by ``(seed, stream,
index)``, so results never depend on how many instances run before it or on
the order jobs are processed in.  Tables are written as CSV with ``#``
comment lines in front that record the configuration and the sampling
distributions.
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, field, fields
from typing import Callable, Sequence

import numpy as np

from .algebra import Chain
from ._kernel import kernel_for
from .basebuild import base_from_context, is_saturated, normalize_pairs, verify_system, witness_check, witness_transform
from .context import DEFAULT_CAP, FormalContext
from .errors import CapacityError, FuzzyImplError
from .fuzzyset import Universe
from .graphmethod import build_graph, enumerate_systems
from .implications import Theory, equivalent, is_nonredundant

# stream tags keep the generators of different experiments apart
_FIG1, _FIG2, _FIG34, _THEORY, _CONTEXT = 1, 2, 3, 4, 5

BUCKET_WIDTH = 5
BUCKETS = tuple(range(1, 100, BUCKET_WIDTH))  # 1, 6, ..., 96


class VerificationError(FuzzyImplError):
    """A spot-checked instance failed an independent verifier."""


@dataclass
class ExperimentConfig:
    seed: int = 0
    instances: int = 20
    objects: int = 10
    attributes: int = 10
    scale: int = 4
    logic: str = "lukasiewicz"
    hedge: str = "globalization"
    idempotent_counts: tuple[int, ...] = (2, 3, 6, 11)
    formulas: int = 10
    densities: tuple[int, ...] = BUCKETS
    repeats: int = 3
    graph_repeats: int = 3
    cap: int = DEFAULT_CAP
    spot_check: int = 0  # verify every k-th successful instance; 0 disables

    def __post_init__(self):
        for name in ("instances", "objects", "attributes", "scale", "formulas", "repeats", "graph_repeats", "cap"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.spot_check < 0:
            raise ValueError("spot_check must be non-negative")

    def describe(self) -> list[str]:
        return [f"{f.name}={getattr(self, f.name)}" for f in fields(self)]


def instance_rng(seed: int, *stream: int) -> np.random.Generator:
    return np.random.default_rng([seed & (2**64 - 1), *stream])


# -- random instances ----------------------------------------------------------


def random_context(
    rng: np.random.Generator, chain: Chain, objects: int, attributes: int, density: float
) -> FormalContext:
    """Cells drawn independently as ``Binomial(n, density/100)`` indices.

    The expected density equals ``density``; 0 gives the all-zero table and
    100 the all-one table.
    """
    if not 0 <= density <= 100:
        raise ValueError("density must lie in [0, 100]")
    table = rng.binomial(chain.n, density / 100, size=(objects, attributes))
    return FormalContext(
        [f"x{i + 1}" for i in range(objects)],
        _attribute_names(attributes),
        chain,
        table.tolist(),
    )


def random_context_in_bucket(
    rng: np.random.Generator, chain: Chain, objects: int, attributes: int, center: int, tries: int = 1000
) -> FormalContext:
    """Rejection-sample a context whose density lies in ``[center-2.5, center+2.5)``."""
    lo, hi = center - BUCKET_WIDTH / 2, center + BUCKET_WIDTH / 2
    for _ in range(tries):
        ctx = random_context(rng, chain, objects, attributes, min(max(center, 0), 100))
        if lo <= ctx.density() < hi:
            return ctx
    raise RuntimeError(f"no context with density near {center} after {tries} draws")


def _attribute_names(count: int) -> list[str]:
    base = "pqrstuvwyz"
    if count <= len(base):
        return list(base[:count])
    return [f"y{i + 1}" for i in range(count)]


def _random_set(rng: np.random.Generator, n: int, width: int, support: float, full: float) -> tuple[int, ...]:
    present = rng.random(width) < support
    whole = rng.random(width) < full
    partial = rng.integers(1, n, size=width) if n > 1 else np.ones(width, dtype=int)
    return tuple(0 if not p else n if w else int(v) for p, w, v in zip(present, whole, partial))


def random_saturated_nonredundant_theory(
    rng: np.random.Generator,
    chain: Chain,
    attributes: int,
    formulas: int,
    attempts: int | None = None,
    support: float = 0.5,
    full: float = 0.95,
) -> Theory:
    """Grow a theory one random implication at a time, normalizing after each.

    Antecedent and consequent degrees are independent per attribute: zero
    with probability ``1 - support``; otherwise 1 with probability ``full``
    and uniform on the interior degrees ``1/n .. (n-1)/n`` else.  Draws that
    leave the size unchanged count as failed attempts; the result may be
    shorter than ``formulas`` when ``attempts`` run out.
    """
    universe = Universe(_attribute_names(attributes))
    attempts = 20 * formulas if attempts is None else attempts
    kernel = kernel_for(chain, attributes)
    pairs: list = []
    for _ in range(attempts):
        if len(pairs) >= formulas:
            break
        a = _random_set(rng, chain.n, attributes, support, full)
        b = _random_set(rng, chain.n, attributes, support, full)
        grown = normalize_pairs(kernel, [*pairs, (a, b)])
        if len(grown) > len(pairs):
            pairs = grown
    return Theory.from_pairs(pairs, universe, chain)


# -- tables ----------------------------------------------------------------------


@dataclass
class ExperimentTable:
    columns: list[str]
    rows: list[list]
    comments: list[str] = field(default_factory=list)
    timing_columns: tuple[str, ...] = ()

    def to_csv(self) -> str:
        buf = io.StringIO()
        for line in self.comments:
            buf.write(f"# {line}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_cell(v) for v in row])
        return buf.getvalue()

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [row[i] for row in self.rows]


def _cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def strip_timing(csv_text: str, timing_columns: Sequence[str]) -> str:
    """The CSV without its timing columns, for byte-level determinism checks."""
    lines = [line for line in csv_text.splitlines() if not line.startswith("#")]
    rows = list(csv.reader(lines))
    keep = [i for i, name in enumerate(rows[0]) if name not in timing_columns]
    return "\n".join(",".join(row[i] for i in keep) for row in rows)


def timed(fn: Callable[[], object], repeats: int) -> tuple[object, float]:
    """Result of ``fn`` and the median wall time over ``repeats`` calls."""
    times, result = [], None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return result, statistics.median(times)


def _spot(cfg: ExperimentConfig, counter: int) -> bool:
    return cfg.spot_check > 0 and counter % cfg.spot_check == 0


# -- success ratio of the transform -------------------------------------------------


def fig1_chain(rng: np.random.Generator, n: int, count: int, hedge: str) -> Chain:
    """BL chain with ``count`` idempotents: 0, 1 and ``count-2`` random interior degrees."""
    if not 2 <= count <= n + 1:
        raise ValueError(f"idempotent count must lie in 2..{n + 1}")
    interior = rng.choice(np.arange(1, n), size=count - 2, replace=False) if count > 2 else []
    return Chain.bl(n, (0, n, *(int(i) for i in interior)), hedge)


def run_fig1(cfg: ExperimentConfig) -> ExperimentTable:
    rows = []
    for count in cfg.idempotent_counts:
        successes = checked = 0
        for i in range(cfg.instances):
            rng = instance_rng(cfg.seed, _FIG1, count, i)
            chain = fig1_chain(rng, cfg.scale, count, cfg.hedge)
            gamma = random_saturated_nonredundant_theory(rng, chain, cfg.attributes, cfg.formulas)
            result = witness_transform(gamma)
            if result.equivalent:
                successes += 1
                if _spot(cfg, successes):
                    checked += 1
                    _check_fig1(result.theory, gamma)
        ratio = 100 * successes / cfg.instances
        rows.append([count, cfg.instances, successes, f"{ratio:.4f}", checked])
    comments = [
        "success ratio of the witnessing transform on random saturated non-redundant theories",
        f"chain: BL ordinal sum on scale {cfg.scale}, 0 and 1 plus count-2 interior idempotents drawn uniformly "
        "without replacement per instance",
        "theory: grown one implication at a time and normalized; each degree is 0 with probability 0.5, "
        "else 1 with probability 0.95, else uniform on the interior degrees",
        *cfg.describe(),
    ]
    return ExperimentTable(["idempotents", "instances", "successes", "success_ratio", "spot_checked"], rows, comments)


def _check_fig1(sigma: Theory, gamma: Theory) -> None:
    if not (is_saturated(gamma) and is_nonredundant(gamma)):
        raise VerificationError("generated theory is not saturated and non-redundant")
    if not equivalent(gamma, sigma):
        raise VerificationError("transform reported equivalent but the check disagrees")


# -- graph method against the transform pipeline --------------------------------------


@dataclass
class Fig2Instance:
    density: int
    graph_time: float
    alt_time: float
    systems: int
    agree: bool


def fig2_instance(cfg: ExperimentConfig, chain: Chain, center: int, i: int, check: bool = False) -> Fig2Instance:
    rng = instance_rng(cfg.seed, _FIG2, center, i)
    ctx = random_context_in_bucket(rng, chain, cfg.objects, cfg.attributes, center)
    systems, graph_time = timed(lambda: enumerate_systems(build_graph(ctx, cfg.cap)), cfg.graph_repeats)
    alt, alt_time = timed(lambda: base_from_context(ctx, "auto", cfg.cap), cfg.repeats)
    agree = len(systems) == 1 and alt.system is not None and systems[0] == alt.system
    if check and alt.system is not None:
        if not witness_check(alt.theory).witnessed or not verify_system(alt.system.members, ctx, cfg.cap):
            raise VerificationError(f"instance {i} at density {center} failed verification")
    return Fig2Instance(center, graph_time, alt_time, len(systems), agree)


def run_fig2(cfg: ExperimentConfig) -> ExperimentTable:
    chain = Chain(cfg.scale, cfg.logic, "globalization")
    rows = []
    for center in cfg.densities:
        done, excluded, agree = [], 0, 0
        for i in range(cfg.instances):
            try:
                inst = fig2_instance(cfg, chain, center, i, _spot(cfg, i + 1))
            except CapacityError:
                excluded += 1
                continue
            done.append(inst)
            agree += inst.agree
        g = [x.graph_time for x in done]
        a = [x.alt_time for x in done]
        rows.append(
            [
                center,
                len(done),
                excluded,
                agree,
                _mean(g),
                _mean(a),
                _median(g),
                _median(a),
            ]
        )
    comments = [
        "graph method against the transform pipeline, globalization",
        f"context: {cfg.objects}x{cfg.attributes}, cells Binomial(n, d/100) with n={cfg.scale}, "
        "rejection-sampled until the density lies in [d-2.5, d+2.5)",
        f"timing: monotonic clock, median of {cfg.graph_repeats} (graph) and {cfg.repeats} (pipeline) runs per instance",
        *cfg.describe(),
    ]
    columns = ["density", "instances", "capacity_excluded", "agree", "graph_mean", "alt_mean", "graph_median", "alt_median"]
    return ExperimentTable(columns, rows, comments, FIG2_TIMING)


FIG2_TIMING = ("graph_mean", "alt_mean", "graph_median", "alt_median")


# -- base size and running time by density ---------------------------------------------


def run_fig34(cfg: ExperimentConfig) -> ExperimentTable:
    chain = Chain(cfg.scale, cfg.logic, "globalization")
    rows = []
    for center in cfg.densities:
        times, sizes, excluded = [], [], 0
        for i in range(cfg.instances):
            rng = instance_rng(cfg.seed, _FIG34, center, i)
            ctx = random_context_in_bucket(rng, chain, cfg.objects, cfg.attributes, center)
            try:
                result, t = timed(lambda: base_from_context(ctx, "auto", cfg.cap), cfg.repeats)
            except CapacityError:
                excluded += 1
                continue
            if result.system is None:
                raise VerificationError(f"no base for instance {i} at density {center}")
            if _spot(cfg, i + 1) and not witness_check(result.theory).witnessed:
                raise VerificationError(f"instance {i} at density {center} is not witnessed")
            times.append(t)
            sizes.append(len(result.theory))
        mean_size = f"{statistics.fmean(sizes):.4f}" if sizes else "nan"
        rows.append([center, len(times), excluded, mean_size, _mean(times), _median(times)])
    comments = [
        "base size and running time of the transform pipeline by density, globalization",
        f"context: {cfg.objects}x{cfg.attributes}, cells Binomial(n, d/100) with n={cfg.scale}, "
        "rejection-sampled until the density lies in [d-2.5, d+2.5)",
        f"timing: monotonic clock, median of {cfg.repeats} runs per instance",
        *cfg.describe(),
    ]
    columns = ["density", "instances", "capacity_excluded", "mean_base_size", "mean_time", "median_time"]
    return ExperimentTable(columns, rows, comments, FIG34_TIMING)


FIG34_TIMING = ("mean_time", "median_time")


def _mean(xs: list[float]) -> float:
    return statistics.fmean(xs) if xs else float("nan")


def _median(xs: list[float]) -> float:
    return statistics.median(xs) if xs else float("nan")
