"""Constrained problems, fitness evaluation, and the feasibility-first comparator.

A problem is a box-bounded objective plus inequality constraints in the form
``g_j(x) <= 0``.  Fitness values carry the objective (always stored in
minimization sense) together with the total constraint violation
``sum_j max(0, g_j(x))``; candidates are ranked by the classic feasibility
rules: feasible beats infeasible, feasible pairs compare by objective,
infeasible pairs compare by violation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import EvaluationError, InvalidInputError


class Sense(enum.Enum):
    """Optimization direction of the raw objective."""

    MINIMIZE = "min"
    MAXIMIZE = "max"


class Comparison(enum.Enum):
    A_BETTER = "a"
    B_BETTER = "b"
    TIE = "tie"


# Objectives and constraints operate on arrays of shape (..., dim) and reduce
# the last axis, so the same callable serves single points and whole swarms.
VectorFunc = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class BoxBounds:
    """Per-dimension closed interval bounds ``[lower_d, upper_d]``."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=float))
        upper = np.atleast_1d(np.asarray(self.upper, dtype=float))
        if lower.ndim != 1 or lower.shape != upper.shape or lower.size < 1:
            raise InvalidInputError("bounds must be 1-D vectors of equal length >= 1")
        if not (np.isfinite(lower).all() and np.isfinite(upper).all()):
            raise InvalidInputError("bounds must be finite")
        if not (lower < upper).all():
            raise InvalidInputError("every lower bound must be strictly below its upper bound")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dim(self) -> int:
        return self.lower.size

    @property
    def span(self) -> np.ndarray:
        """Per-dimension range ``upper - lower`` (always positive)."""
        return self.upper - self.lower

    def contains(self, points: np.ndarray) -> bool:
        points = np.asarray(points, dtype=float)
        return bool(((points >= self.lower) & (points <= self.upper)).all())


@dataclass(frozen=True)
class Problem:
    """A box-bounded objective with inequality constraints ``g_j(x) <= 0``."""

    name: str
    bounds: BoxBounds
    objective: VectorFunc
    constraints: tuple[VectorFunc, ...] = ()
    sense: Sense = Sense.MINIMIZE
    known_best_value: Optional[float] = None
    known_best_point: Optional[tuple[float, ...]] = None

    @property
    def dim(self) -> int:
        return self.bounds.dim

    @property
    def n_constraints(self) -> int:
        return len(self.constraints)


@dataclass(frozen=True)
class Fitness:
    """Evaluation outcome: objective in minimization sense plus violation."""

    objective: float
    violation: float

    @property
    def feasible(self) -> bool:
        return self.violation == 0.0


class EvalCounter:
    """Mutable evaluation tally; each run owns exactly one."""

    __slots__ = ("count",)

    def __init__(self, count: int = 0):
        self.count = count

    def add(self, n: int) -> None:
        self.count += n


def evaluate_many(
    problem: Problem, points: np.ndarray, counter: Optional[EvalCounter] = None
) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate a batch of in-box points of shape (..., dim).

    Returns (objectives, violations) with shape (...,).  Objectives are
    sign-adjusted to minimization sense.  Raises :class:`EvaluationError`
    if any objective or constraint value is non-finite.
    """
    points = np.asarray(points, dtype=float)
    obj = np.asarray(problem.objective(points), dtype=float)
    if problem.sense is Sense.MAXIMIZE:
        obj = -obj
    viol = np.zeros_like(obj)
    for g in problem.constraints:
        viol = viol + np.maximum(0.0, np.asarray(g(points), dtype=float))
    bad = ~(np.isfinite(obj) & np.isfinite(viol))
    if bad.any():
        offender = points[bad][0] if points.ndim > 1 else points
        raise EvaluationError(
            f"non-finite objective/constraint value for problem {problem.name!r}",
            point=np.array(offender, copy=True),
        )
    if counter is not None:
        counter.add(int(obj.size) if obj.ndim else 1)
    return obj, viol


def evaluate(
    problem: Problem, point: np.ndarray, counter: Optional[EvalCounter] = None
) -> Fitness:
    """Evaluate one point that must lie inside the bounds.

    The returned objective is negated for maximization problems so that all
    downstream comparisons minimize.
    """
    point = np.asarray(point, dtype=float)
    if point.ndim != 1 or point.size != problem.dim:
        raise InvalidInputError(
            f"point has length {point.size}, problem {problem.name!r} expects {problem.dim}"
        )
    if not np.isfinite(point).all():
        raise InvalidInputError("point contains non-finite coordinates")
    if not problem.bounds.contains(point):
        raise InvalidInputError("point lies outside the search box")
    obj, viol = evaluate_many(problem, point, counter)
    return Fitness(objective=float(obj), violation=float(viol))


def deb_compare(a: Fitness, b: Fitness) -> Comparison:
    """Rank two fitness values by the feasibility-first rules.

    Feasible beats infeasible; two feasible values compare by objective
    (smaller wins); two infeasible values compare by violation (smaller
    wins).  Exact equality of the deciding quantity is a tie.
    """
    if a.feasible != b.feasible:
        return Comparison.A_BETTER if a.feasible else Comparison.B_BETTER
    if a.feasible:
        ka, kb = a.objective, b.objective
    else:
        ka, kb = a.violation, b.violation
    if ka < kb:
        return Comparison.A_BETTER
    if kb < ka:
        return Comparison.B_BETTER
    return Comparison.TIE


def deb_improves(
    new_obj: np.ndarray,
    new_viol: np.ndarray,
    old_obj: np.ndarray,
    old_viol: np.ndarray,
) -> np.ndarray:
    """Vectorized strict comparator: True where (new) Deb-beats (old)."""
    new_feas = new_viol == 0.0
    old_feas = old_viol == 0.0
    both_feas = new_feas & old_feas
    both_infeas = ~new_feas & ~old_feas
    return (
        (new_feas & ~old_feas)
        | (both_feas & (new_obj < old_obj))
        | (both_infeas & (new_viol < old_viol))
    )


def deb_argbest(objectives: np.ndarray, violations: np.ndarray) -> int:
    """Index of the Deb-best entry; ties resolve to the lowest index."""
    feasible = violations == 0.0
    if feasible.any():
        candidates = np.flatnonzero(feasible)
        return int(candidates[np.argmin(objectives[candidates])])
    return int(np.argmin(violations))
