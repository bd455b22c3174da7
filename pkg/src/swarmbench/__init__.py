"""Constrained particle swarm optimization with pluggable boundary handling.

The package provides two swarm engines (linearly-decreasing-inertia PSO and
a constriction-factor PSO hybridized with a differential memory operator),
three boundary strategies (clamp, uniform redraw, periodic wrap), a registry
of constrained benchmark problems with verified best-known optima, and an
experiment harness exposed both as a library and over HTTP.
"""

__version__ = "0.1.0"

from .boundary import BoundaryMode, enforce_mode, finalize_answer, map_periodic
from .engines import (
    DepsConfig,
    LpsConfig,
    Particle,
    RunResult,
    Swarm,
    constriction,
    deps_step,
    inertia_at,
    init_swarm,
    lps_step,
    run,
)
from .errors import (
    EvaluationError,
    InvalidConfigError,
    InvalidInputError,
    SwarmbenchError,
    UnknownProblemError,
)
from .benchmarks import (
    BenchmarkEntry,
    OptimumLocation,
    OptimumReport,
    get_problem,
    problem_names,
    verify_entry,
    verify_optima,
)
from .harness import (
    CaseSpec,
    RunRecord,
    RunStats,
    emit_results,
    reproduce_table,
    run_case,
)
from .problems import (
    BoxBounds,
    Comparison,
    EvalCounter,
    Fitness,
    Problem,
    Sense,
    deb_argbest,
    deb_compare,
    deb_improves,
    evaluate,
    evaluate_many,
)

__all__ = [
    "__version__",
    "BenchmarkEntry",
    "BoundaryMode",
    "BoxBounds",
    "CaseSpec",
    "Comparison",
    "DepsConfig",
    "EvalCounter",
    "EvaluationError",
    "Fitness",
    "InvalidConfigError",
    "InvalidInputError",
    "LpsConfig",
    "OptimumLocation",
    "OptimumReport",
    "Particle",
    "Problem",
    "RunRecord",
    "RunResult",
    "RunStats",
    "Sense",
    "Swarm",
    "SwarmbenchError",
    "UnknownProblemError",
    "constriction",
    "deb_argbest",
    "deb_compare",
    "deb_improves",
    "deps_step",
    "emit_results",
    "enforce_mode",
    "evaluate",
    "evaluate_many",
    "finalize_answer",
    "get_problem",
    "inertia_at",
    "init_swarm",
    "lps_step",
    "map_periodic",
    "problem_names",
    "reproduce_table",
    "run",
    "run_case",
    "verify_entry",
    "verify_optima",
]
