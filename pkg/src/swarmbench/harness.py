"""Experiment harness: multi-run cases, aggregate statistics, and emission.

A case executes R independent seeded runs of one engine/mode/problem
combination and aggregates them the way the comparative tables do: the mean
best value is taken only over runs whose final answer is feasible, and the
failure rate is the percentage of runs that never produced a feasible
answer.  Reported values are in the problem's original sense (maximization
values are un-negated).
"""

from __future__ import annotations

import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional, TextIO, Union

from .benchmarks import REGISTRY, get_problem
from .boundary import BoundaryMode
from .engines import DepsConfig, EngineConfig, LpsConfig, RunResult, run
from .errors import InvalidConfigError
from .problems import Sense

ENGINES = ("lps", "deps")

CSV_COLUMNS = (
    "problem", "engine", "mode", "particles", "generations",
    "run_index", "seed", "best_value", "violation", "feasible", "evaluations",
)


@dataclass(frozen=True)
class CaseSpec:
    """One experiment case: problem + engine + mode + budget + run count."""

    problem: str
    engine: str
    mode: BoundaryMode
    particles: int
    generations: int
    runs: int = 30
    base_seed: int = 2004

    def __post_init__(self):
        object.__setattr__(self, "mode", BoundaryMode.parse(self.mode))
        if self.engine not in ENGINES:
            raise InvalidConfigError(f"unknown engine {self.engine!r}; expected one of {ENGINES}")
        if self.runs < 1:
            raise InvalidConfigError("runs must be >= 1")
        # constructing the engine config validates the remaining invariants
        build_engine_config(self)


def build_engine_config(spec: CaseSpec) -> EngineConfig:
    """Engine parameterization for a case; everything not in the spec uses
    the standard settings (w 0.9->0.4 and c1=c2=2 for LPS; c1=c2=2.05 with
    CR=0.9 for DEPS)."""
    if spec.engine == "lps":
        return LpsConfig(
            particles=spec.particles, generations=spec.generations, mode=spec.mode
        )
    return DepsConfig(
        particles=spec.particles, generations=spec.generations, mode=spec.mode
    )


@dataclass(frozen=True)
class RunRecord:
    """Per-run reporting row; best_value is in the problem's original sense."""

    run_index: int
    seed: int
    best_value: float
    violation: float
    feasible: bool
    evaluations: int
    best_point: tuple[float, ...]


@dataclass(frozen=True)
class RunStats:
    """Aggregate over one case's runs."""

    case: CaseSpec
    per_run: tuple[RunRecord, ...]

    @property
    def runs(self) -> int:
        return len(self.per_run)

    @property
    def n_succeeded(self) -> int:
        return sum(1 for r in self.per_run if r.feasible)

    @property
    def failure_rate(self) -> float:
        return 100.0 * (self.runs - self.n_succeeded) / self.runs

    @property
    def mean_best(self) -> Optional[float]:
        """Mean best value over feasible runs; None when no run succeeded."""
        values = [r.best_value for r in self.per_run if r.feasible]
        if not values:
            return None
        return sum(values) / len(values)


def _record(result: RunResult, run_index: int, sense: Sense) -> RunRecord:
    obj = result.best_fitness.objective
    value = -obj if sense is Sense.MAXIMIZE else obj
    return RunRecord(
        run_index=run_index,
        seed=result.seed,
        best_value=value,
        violation=result.best_fitness.violation,
        feasible=result.entered_feasible,
        evaluations=result.evaluations_used,
        best_point=tuple(float(v) for v in result.best_point),
    )


def run_case(spec: CaseSpec, jobs: int = 1) -> RunStats:
    """Execute all runs of a case (seeds base_seed + run_index) and aggregate.

    Runs share no mutable state, so they may execute on up to ``jobs``
    worker threads; records are ordered by run index either way.
    """
    entry = get_problem(spec.problem)
    problem, sense = entry.problem, entry.problem.sense
    config = build_engine_config(spec)

    def one(i: int) -> RunRecord:
        return _record(run(problem, config, spec.base_seed + i), i, sense)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(one, range(spec.runs)))
    else:
        records = [one(i) for i in range(spec.runs)]
    records.sort(key=lambda r: r.run_index)
    return RunStats(case=spec, per_run=tuple(records))


def render_csv(stats: RunStats) -> str:
    """Per-run rows only (no summary row); floats keep full precision."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    c = stats.case
    for r in stats.per_run:
        writer.writerow([
            c.problem, c.engine, c.mode.value, c.particles, c.generations,
            r.run_index, r.seed, repr(r.best_value), repr(r.violation),
            "true" if r.feasible else "false", r.evaluations,
        ])
    return out.getvalue()


def stats_as_dict(stats: RunStats) -> dict:
    c = stats.case
    return {
        "case": {
            "problem": c.problem,
            "engine": c.engine,
            "mode": c.mode.value,
            "particles": c.particles,
            "generations": c.generations,
            "runs": c.runs,
            "base_seed": c.base_seed,
        },
        "aggregate": {
            "mean_best": stats.mean_best,
            "failure_rate": stats.failure_rate,
            "n_succeeded": stats.n_succeeded,
            "runs": stats.runs,
        },
        "runs": [
            {
                "run_index": r.run_index,
                "seed": r.seed,
                "best_value": r.best_value,
                "violation": r.violation,
                "feasible": r.feasible,
                "evaluations": r.evaluations,
                "best_point": list(r.best_point),
            }
            for r in stats.per_run
        ],
    }


def render_json(stats: RunStats) -> str:
    return json.dumps(stats_as_dict(stats), indent=2) + "\n"


def render_summary(stats: RunStats) -> str:
    """Human-readable aggregate block at six significant digits."""
    c = stats.case
    mean = stats.mean_best
    mean_text = f"{mean:.6g}" if mean is not None else "n/a (no feasible run)"
    return (
        f"case: problem={c.problem} engine={c.engine} mode={c.mode.value} "
        f"N={c.particles} T={c.generations} runs={c.runs} seed={c.base_seed}\n"
        f"mean_best={mean_text} failure_rate={stats.failure_rate:.6g}% "
        f"succeeded={stats.n_succeeded}/{stats.runs}\n"
    )


def emit_results(
    stats: RunStats,
    format: str = "csv",
    destination: Union[str, TextIO, None] = None,
) -> None:
    """Write per-run results as CSV or JSON to a path, file object, or stdout."""
    if format == "csv":
        payload = render_csv(stats)
    elif format == "json":
        payload = render_json(stats)
    else:
        raise InvalidConfigError(f"unknown format {format!r}; expected 'csv' or 'json'")
    if destination is None:
        sys.stdout.write(payload)
    elif hasattr(destination, "write"):
        destination.write(payload)
    else:
        with open(destination, "w", newline="") as fh:
            fh.write(payload)


# Published comparison values: mean best per case, with failure percentages
# (None where the source reports no failed runs).
TABLE2_CASES = (
    ("#B", BoundaryMode.BOUNDARY, 14),
    ("#R", BoundaryMode.RANDOM, 14),
    ("#P1", BoundaryMode.PERIODIC, 14),
    ("#P2", BoundaryMode.PERIODIC, 70),
)

T3_PROBLEMS = ("g01", "g02", "g04", "g06", "g07", "g08", "g09", "g10")

PAPER_T3 = {
    "g01": ((-4.998, None), (-1.936, 79.0), (-14.9140, None), (-14.9961, None)),
    "g02": ((0.50052, None), (0.43463, None), (0.71921, None), (0.77867, None)),
    "g04": ((-30549.87, None), (-30517.0, None), (-30665.5, None), (-30665.54, None)),
    "g06": ((-6961.8, 96.0), (-4592.9, None), (-6961.7, None), (-6961.814, None)),
    "g07": ((914.790, 11.0), (38.511, None), (26.047, None), (25.161, None)),
    "g08": ((0.095825, 2.0), (0.095825, None), (0.095825, None), (0.095825, None)),
    "g09": ((121114.09, None), (680.76, None), (680.75, None), (680.66, None)),
    "g10": ((12398.0, 21.0), (8285.6, None), (7756.6, None), (7562.6, None)),
}

PAPER_T4 = {
    "g01": ((-6.259, None), (-12.248, None), (-14.271, None), (-15.000, None)),
    "g02": ((0.36326, None), (0.40280, None), (0.48664, None), (0.64330, None)),
    "g04": ((-30646.43, None), (-30662.20, None), (-30665.54, None), (-30665.54, None)),
    "g06": ((-6961.8, 74.0), (-6931.271, None), (-6961.814, None), (-6961.814, None)),
    "g07": ((209.300, 2.0), (26.358, None), (24.897, None), (24.306, None)),
    "g08": ((0.095691, None), (0.095425, None), (0.095558, None), (0.095825, None)),
    "g09": ((20819.319, None), (680.690, None), (680.690, None), (680.630, None)),
    "g10": ((8378.4, 4.0), (7506.5, None), (7343.5, None), (7049.5, None)),
}

T6_MODES = (BoundaryMode.BOUNDARY, BoundaryMode.RANDOM, BoundaryMode.PERIODIC)

T6_PROBLEMS = ("wb", "sr", "tb", "ts")

PAPER_T6 = {
    "wb": (3.35408, 2.56145, 2.40403),
    "sr": (3060.910, 3100.733, 2994.497),
    "tb": (263.89646, 263.89649, 263.89654),
    "ts": (0.013129, 0.015372, 0.012922),
}

TABLES = ("t3", "t4", "t6")


@dataclass(frozen=True)
class CellResult:
    """One table cell: obtained statistics next to the published reference."""

    problem: str
    label: str
    engine: str
    mode: BoundaryMode
    particles: int
    generations: int
    runs: int
    mean_best: Optional[float]
    failure_rate: float
    paper_mean: float
    paper_failure_rate: Optional[float]


@dataclass(frozen=True)
class ReproduceReport:
    table: str
    rows: tuple[CellResult, ...]

    def render_text(self) -> str:
        lines = [
            f"table {self.table}: obtained mean (failure %) vs published mean (failure %)",
            f"{'problem':8s} {'case':10s} {'obtained':>22s} {'published':>22s}",
        ]
        for r in self.rows:
            got_mean = f"{r.mean_best:.6g}" if r.mean_best is not None else "n/a"
            got = f"{got_mean} ({r.failure_rate:.4g}%)"
            ref_fail = f" ({r.paper_failure_rate:.4g}%)" if r.paper_failure_rate is not None else ""
            ref = f"{r.paper_mean:.6g}{ref_fail}"
            label = f"{r.engine}{r.label}" if r.label.startswith("#") else f"{r.engine} {r.label}"
            lines.append(f"{r.problem:8s} {label:10s} {got:>22s} {ref:>22s}")
        return "\n".join(lines) + "\n"


def reproduce_table(
    table_id: str, runs: int = 30, base_seed: int = 2004, jobs: int = 1
) -> ReproduceReport:
    """Re-run every cell of one published comparison table at desk scale.

    The published experiments used 100 runs (500 for the engineering table);
    pass ``runs`` to trade fidelity for time.
    """
    if table_id not in TABLES:
        raise InvalidConfigError(f"unknown table {table_id!r}; expected one of {TABLES}")
    rows = []
    if table_id in ("t3", "t4"):
        engine = "lps" if table_id == "t3" else "deps"
        reference = PAPER_T3 if table_id == "t3" else PAPER_T4
        for problem in T3_PROBLEMS:
            for (label, mode, n), (paper_mean, paper_fail) in zip(
                TABLE2_CASES, reference[problem]
            ):
                spec = CaseSpec(problem, engine, mode, n, 2000, runs, base_seed)
                stats = run_case(spec, jobs=jobs)
                rows.append(CellResult(
                    problem, label, engine, mode, n, 2000, runs,
                    stats.mean_best, stats.failure_rate, paper_mean, paper_fail,
                ))
    else:
        for problem in T6_PROBLEMS:
            for mode, paper_mean in zip(T6_MODES, PAPER_T6[problem]):
                spec = CaseSpec(problem, "lps", mode, 40, 500, runs, base_seed)
                stats = run_case(spec, jobs=jobs)
                rows.append(CellResult(
                    problem, mode.value, "lps", mode, 40, 500, runs,
                    stats.mean_best, stats.failure_rate, paper_mean, None,
                ))
    return ReproduceReport(table=table_id, rows=tuple(rows))
