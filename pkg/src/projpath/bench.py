"""Density and size sweeps over random mixed graphs.

Each cell of the sweep (size ``n``, target density) generates ``repetitions``
seeded graphs and measures the refined build, single-path reconstruction
lookups, distance statistics, and a plain queue-based traversal as baseline.
Timed sections run one at a time; the harness never overlaps them.
"""

from __future__ import annotations

import csv
import io
import math
import time
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError
from .graph import MixedGraph
from .oracle import bfs_distances
from .paths import reconstruct_one
from .refined import build_refined


def gen_random_mixed(
    n: int,
    target_density: float,
    arc_fraction: float,
    seed: int | Sequence[int],
) -> MixedGraph:
    """Random mixed graph with exactly ``round(target_density * n * (n - 1))`` links.

    About ``arc_fraction`` of the chosen vertex pairs become arcs (random
    direction), the rest edges; the edge/arc split is adjusted so the ordered
    link count is hit exactly.
    """
    if not 0 <= target_density <= 1:
        raise ConfigError(f"density must lie in [0, 1], got {target_density}")
    if not 0 <= arc_fraction <= 1:
        raise ConfigError(f"arc_fraction must lie in [0, 1], got {arc_fraction}")
    rng = np.random.default_rng(seed)
    adj = np.zeros((n, n), dtype=bool)
    pairs = n * (n - 1) // 2
    links = round(target_density * n * (n - 1))
    if pairs == 0 or links == 0:
        return MixedGraph(adj)
    edges = round((1 - arc_fraction) * links / (2 - arc_fraction))
    edges = min(max(edges, links - pairs), links // 2)
    arcs = links - 2 * edges
    iu, ju = np.triu_indices(n, k=1)
    chosen = rng.choice(pairs, size=edges + arcs, replace=False)
    flips = rng.random(arcs) < 0.5
    for idx in chosen[:edges]:
        i, j = iu[idx], ju[idx]
        adj[i, j] = adj[j, i] = True
    for idx, flip in zip(chosen[edges:], flips):
        i, j = iu[idx], ju[idx]
        if flip:
            i, j = j, i
        adj[i, j] = True
    return MixedGraph(adj)


@dataclass(frozen=True)
class BenchConfig:
    sizes: tuple[int, ...] = (64, 128, 256)
    densities: tuple[float, ...] = (0.05, 0.2, 0.5, 0.9)
    arc_fraction: float = 0.3
    seed: int = 0
    repetitions: int = 5
    sources: int | None = None  # None: every vertex is a source

    def __post_init__(self) -> None:
        if not self.sizes or any(n < 1 for n in self.sizes):
            raise ConfigError("sizes must be positive")
        if not self.densities or any(not 0 < d <= 1 for d in self.densities):
            raise ConfigError("densities must lie in (0, 1]")
        if not 0 <= self.arc_fraction <= 1:
            raise ConfigError("arc_fraction must lie in [0, 1]")
        if self.repetitions < 3:
            raise ConfigError("repetitions must be at least 3")
        if self.sources is not None and self.sources < 1:
            raise ConfigError("sources must be positive")

    @classmethod
    def from_text(cls, text: str) -> BenchConfig:
        """Read ``key=value`` lines; ``#`` and ``%`` start comments."""
        kw: dict[str, object] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].split("%", 1)[0].strip()
            if not line:
                continue
            key, sep, value = (s.strip() for s in line.partition("="))
            if not sep:
                raise ConfigError(f"line {lineno}: expected key=value")
            try:
                if key == "sizes":
                    kw[key] = tuple(int(x) for x in value.split(","))
                elif key == "densities":
                    kw[key] = tuple(float(x) for x in value.split(","))
                elif key == "arc_fraction":
                    kw[key] = float(value)
                elif key in ("seed", "repetitions", "sources"):
                    kw[key] = int(value)
                else:
                    raise ConfigError(f"line {lineno}: unknown key {key!r}")
            except ValueError:
                raise ConfigError(f"line {lineno}: bad value for {key}") from None
        return cls(**kw)


@dataclass(frozen=True)
class BenchRow:
    n: int
    density_target: float
    rep: str  # repetition index, or "mean" for the aggregate row
    density: float
    build_time_s: float
    build_time_sd: float
    baseline_time_s: float
    distance_total: int
    distance_count: int
    max_distance: int
    diameter: int | None  # None when some pair is unreachable
    unreachable_pairs: int
    lookups_total: int

    @property
    def mean_distance(self) -> float:
        return self.distance_total / self.distance_count if self.distance_count else 0.0

    @property
    def mean_lookups(self) -> float:
        return self.lookups_total / self.distance_count if self.distance_count else 0.0


@dataclass(frozen=True)
class BenchReport:
    config: BenchConfig
    rows: list[BenchRow] = field(default_factory=list)

    def aggregates(self) -> list[BenchRow]:
        return [r for r in self.rows if r.rep == "mean"]


def _measure(g: MixedGraph, sources: list[int], n: int, rho: float, rep: int) -> BenchRow:
    build_refined(g, sources[0])  # warm-up, discarded
    times = []
    rows = []
    for u in sources:
        t0 = time.perf_counter()
        row = build_refined(g, u)
        times.append(time.perf_counter() - t0)
        rows.append(row)
    t0 = time.perf_counter()
    for u in sources:
        bfs_distances(g, u)
    baseline = (time.perf_counter() - t0) / len(sources)

    total = count = unreachable = 0
    longest = 0
    counter: Counter = Counter()
    for row in rows:
        for v, d in row.dist.items():
            if d is None:
                unreachable += 1
            elif v != row.source:
                total += d
                count += 1
                longest = max(longest, d)
                reconstruct_one(row, v, counter)
    return BenchRow(
        n=n,
        density_target=rho,
        rep=str(rep),
        density=g.density(),
        build_time_s=float(np.mean(times)),
        build_time_sd=float(np.std(times)),
        baseline_time_s=baseline,
        distance_total=total,
        distance_count=count,
        max_distance=longest,
        diameter=None if unreachable else longest,
        unreachable_pairs=unreachable,
        lookups_total=counter["lookups"],
    )


def _aggregate(cell: list[BenchRow]) -> BenchRow:
    first = cell[0]
    diameters = [r.diameter for r in cell]
    return BenchRow(
        n=first.n,
        density_target=first.density_target,
        rep="mean",
        density=float(np.mean([r.density for r in cell])),
        build_time_s=float(np.mean([r.build_time_s for r in cell])),
        build_time_sd=float(np.std([r.build_time_s for r in cell])),
        baseline_time_s=float(np.mean([r.baseline_time_s for r in cell])),
        distance_total=sum(r.distance_total for r in cell),
        distance_count=sum(r.distance_count for r in cell),
        max_distance=max(r.max_distance for r in cell),
        diameter=None if None in diameters else max(diameters),
        unreachable_pairs=sum(r.unreachable_pairs for r in cell),
        lookups_total=sum(r.lookups_total for r in cell),
    )


def run_sweep(cfg: BenchConfig) -> BenchReport:
    report = BenchReport(cfg)
    for n in cfg.sizes:
        for di, rho in enumerate(cfg.densities):
            cell = []
            for rep in range(cfg.repetitions):
                g = gen_random_mixed(n, rho, cfg.arc_fraction, [cfg.seed, n, di, rep])
                sources = list(g.vertices())
                if cfg.sources is not None and cfg.sources < n:
                    picker = np.random.default_rng([cfg.seed, n, di, rep, 1])
                    sources = sorted(int(s) + 1 for s in picker.choice(n, cfg.sources, replace=False))
                cell.append(_measure(g, sources, n, rho, rep))
            report.rows.extend(cell)
            report.rows.append(_aggregate(cell))
    return report


TIMING_COLUMNS = ("build_time_s", "build_time_sd", "baseline_time_s")
COLUMNS = (
    "n",
    "density_target",
    "rep",
    "density",
    *TIMING_COLUMNS,
    "mean_distance",
    "max_distance",
    "diameter",
    "unreachable_pairs",
    "mean_lookups",
)


def report_to_csv(report: BenchReport, timings: bool = True) -> str:
    """CSV with one row per repetition plus one ``mean`` row per cell.

    Timing columns are the only non-deterministic output; ``timings=False``
    drops them, leaving a file that is byte-identical across runs.
    """
    columns = [c for c in COLUMNS if timings or c not in TIMING_COLUMNS]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in report.rows:
        values = {
            "n": r.n,
            "density_target": f"{r.density_target:g}",
            "rep": r.rep,
            "density": f"{r.density:.6f}",
            "build_time_s": f"{r.build_time_s:.6e}",
            "build_time_sd": f"{r.build_time_sd:.6e}",
            "baseline_time_s": f"{r.baseline_time_s:.6e}",
            "mean_distance": f"{r.mean_distance:.6f}",
            "max_distance": r.max_distance,
            "diameter": "" if r.diameter is None else r.diameter,
            "unreachable_pairs": r.unreachable_pairs,
            "mean_lookups": f"{r.mean_lookups:.6f}",
        }
        writer.writerow([values[c] for c in columns])
    return buf.getvalue()


def growth_exponent(sizes: Sequence[int], times: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    if len(sizes) < 2 or any(t <= 0 for t in times):
        return math.nan
    slope, _ = np.polyfit(np.log(sizes), np.log(times), 1)
    return float(slope)
