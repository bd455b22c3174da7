"""Swarm optimizers: inertia-weight PSO (LPS) and the DE-hybrid variant (DEPS).

Both engines fly a global-best swarm whose memory updates go through the
feasibility-first comparator, so no penalty coefficients are needed.  LPS
uses a linearly annealed inertia weight with per-dimension velocity
clamping; DEPS uses Clerc's constriction coefficient and, on every other
generation, additionally rebuilds personal bests through a differential
trial built around the swarm best.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .boundary import BoundaryMode, enforce_mode, finalize_answer
from .errors import InvalidConfigError
from .problems import (
    EvalCounter,
    Fitness,
    Problem,
    deb_argbest,
    deb_improves,
    evaluate_many,
)


@dataclass(frozen=True)
class LpsConfig:
    """Linearly-decreasing-inertia PSO parameters."""

    particles: int = 14
    generations: int = 2000
    w_start: float = 0.9
    w_end: float = 0.4
    c1: float = 2.0
    c2: float = 2.0
    vmax_fraction: float = 0.5
    mode: BoundaryMode = BoundaryMode.PERIODIC

    def __post_init__(self):
        if self.particles < 2:
            raise InvalidConfigError("LPS needs at least 2 particles")
        if self.generations < 0:
            raise InvalidConfigError("generations must be non-negative")
        if not 0.0 < self.vmax_fraction <= 1.0:
            raise InvalidConfigError("vmax_fraction must be in (0, 1]")


@dataclass(frozen=True)
class DepsConfig:
    """Constriction PSO with a differential memory operator."""

    particles: int = 14
    generations: int = 2000
    c1: float = 2.05
    c2: float = 2.05
    cr: float = 0.9
    mode: BoundaryMode = BoundaryMode.PERIODIC

    def __post_init__(self):
        if self.particles < 5:
            raise InvalidConfigError(
                "DEPS needs at least 5 particles (4 distinct non-target memories per trial)"
            )
        if self.generations < 0:
            raise InvalidConfigError("generations must be non-negative")
        if not 0.0 <= self.cr <= 1.0:
            raise InvalidConfigError("cr must be in [0, 1]")
        constriction(self.c1, self.c2)  # validates c1 + c2 > 4

    @property
    def chi(self) -> float:
        return constriction(self.c1, self.c2)


EngineConfig = Union[LpsConfig, DepsConfig]


def inertia_at(t: int, config: LpsConfig) -> float:
    """Linear inertia schedule from w_start at t=0 to w_end at t=T."""
    if config.generations == 0:
        return config.w_start
    return config.w_start - (config.w_start - config.w_end) * t / config.generations


def constriction(c1: float, c2: float) -> float:
    """Clerc's constriction coefficient 2 / |2 - phi - sqrt(phi^2 - 4 phi)|."""
    phi = c1 + c2
    if phi <= 4.0:
        raise InvalidConfigError(f"constriction requires c1 + c2 > 4, got {phi}")
    return 2.0 / abs(2.0 - phi - math.sqrt(phi * phi - 4.0 * phi))


@dataclass(frozen=True)
class RunResult:
    """Outcome of one seeded optimization run."""

    best_point: np.ndarray
    best_fitness: Fitness
    entered_feasible: bool
    evaluations_used: int
    seed: int


@dataclass
class Particle:
    """Single-particle view used for inspection and tests."""

    position: np.ndarray
    velocity: np.ndarray
    pbest_position: np.ndarray
    pbest_fitness: Fitness


@dataclass
class Swarm:
    """Array-of-particles state; all positions are flight coordinates."""

    positions: np.ndarray  # (N, D)
    velocities: np.ndarray  # (N, D)
    pbest_positions: np.ndarray  # (N, D)
    pbest_objectives: np.ndarray  # (N,), minimization sense
    pbest_violations: np.ndarray  # (N,)
    gbest_index: int
    counter: EvalCounter = field(default_factory=EvalCounter)

    @property
    def size(self) -> int:
        return self.positions.shape[0]

    def particle(self, i: int) -> Particle:
        return Particle(
            position=self.positions[i].copy(),
            velocity=self.velocities[i].copy(),
            pbest_position=self.pbest_positions[i].copy(),
            pbest_fitness=Fitness(
                float(self.pbest_objectives[i]), float(self.pbest_violations[i])
            ),
        )

    @property
    def gbest_position(self) -> np.ndarray:
        return self.pbest_positions[self.gbest_index].copy()

    @property
    def gbest_fitness(self) -> Fitness:
        g = self.gbest_index
        return Fitness(float(self.pbest_objectives[g]), float(self.pbest_violations[g]))


def init_swarm(
    problem: Problem, n: int, vmax_init: np.ndarray, rng: np.random.Generator
) -> Swarm:
    """Uniform positions inside the box, velocities uniform in +/- vmax_init."""
    d = problem.dim
    positions = rng.uniform(problem.bounds.lower, problem.bounds.upper, size=(n, d))
    velocities = rng.uniform(-vmax_init, vmax_init, size=(n, d))
    counter = EvalCounter()
    obj, viol = evaluate_many(problem, positions, counter)
    return Swarm(
        positions=positions,
        velocities=velocities,
        pbest_positions=positions.copy(),
        pbest_objectives=obj,
        pbest_violations=viol,
        gbest_index=deb_argbest(obj, viol),
        counter=counter,
    )


def _absorb(swarm: Swarm, flight: np.ndarray, obj: np.ndarray, viol: np.ndarray) -> None:
    """Fold freshly evaluated candidates into the personal/global memory."""
    improved = deb_improves(obj, viol, swarm.pbest_objectives, swarm.pbest_violations)
    if improved.any():
        swarm.pbest_positions[improved] = flight[improved]
        swarm.pbest_objectives[improved] = obj[improved]
        swarm.pbest_violations[improved] = viol[improved]
    swarm.gbest_index = deb_argbest(swarm.pbest_objectives, swarm.pbest_violations)


def lps_step(
    swarm: Swarm, problem: Problem, t: int, config: LpsConfig, rng: np.random.Generator
) -> None:
    """One LPS generation: move, clamp velocity, enforce bounds, update memory.

    Every particle draws a fresh uniform in [0, 1) per attraction term per
    dimension; the swarm best used for attraction is the one recomputed at
    the end of the previous generation.
    """
    n, d = swarm.positions.shape
    w = inertia_at(t, config)
    r1 = rng.random((n, d))
    r2 = rng.random((n, d))
    gbest = swarm.pbest_positions[swarm.gbest_index]
    velocity = (
        w * swarm.velocities
        + config.c1 * r1 * (swarm.pbest_positions - swarm.positions)
        + config.c2 * r2 * (gbest - swarm.positions)
    )
    vmax = config.vmax_fraction * problem.bounds.span
    np.clip(velocity, -vmax, vmax, out=velocity)
    moved = swarm.positions + velocity
    flight, eval_points, velocity = enforce_mode(
        moved, velocity, problem.bounds, config.mode, rng
    )
    obj, viol = evaluate_many(problem, eval_points, swarm.counter)
    swarm.positions = flight
    swarm.velocities = velocity
    _absorb(swarm, flight, obj, viol)


def pick_distinct(rng: np.random.Generator, n: int, k: int = 4) -> np.ndarray:
    """(n, k) index matrix: per row, k distinct members excluding the row itself."""
    rows = np.arange(n)
    idx = rng.integers(0, n - 1, size=(n, k))
    idx += idx >= rows[:, None]
    while True:
        dup = np.zeros((n, k), dtype=bool)
        for c in range(1, k):
            dup[:, c] = (idx[:, c, None] == idx[:, :c]).any(axis=1)
        bad_rows, bad_cols = np.nonzero(dup)
        if bad_rows.size == 0:
            return idx
        fresh = rng.integers(0, n - 1, size=bad_rows.size)
        fresh += fresh >= bad_rows
        idx[bad_rows, bad_cols] = fresh


def build_de_trials(
    pbest_positions: np.ndarray,
    gbest_index: int,
    cr: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Differential trials targeting each particle's personal best.

    Selected dimensions (probability ``cr``, plus one forced dimension per
    trial) take the swarm-best coordinate offset by the average of two
    difference vectors between distinct randomly chosen personal bests;
    the remaining dimensions keep the target's own personal best.
    """
    n, d = pbest_positions.shape
    idx = pick_distinct(rng, n, 4)
    pb = pbest_positions
    delta = 0.5 * ((pb[idx[:, 0]] - pb[idx[:, 1]]) + (pb[idx[:, 2]] - pb[idx[:, 3]]))
    cross = rng.random((n, d)) < cr
    cross[np.arange(n), rng.integers(0, d, size=n)] = True
    return np.where(cross, pb[gbest_index] + delta, pb)


def deps_step(
    swarm: Swarm, problem: Problem, t: int, config: DepsConfig, rng: np.random.Generator
) -> None:
    """One DEPS generation: constriction move, then (odd t) differential trials.

    Trials go through the same boundary enforcement as a moved particle and
    replace the targeted personal best only on a strict comparator win; the
    particle's position and velocity are untouched by the trial.
    """
    n, d = swarm.positions.shape
    chi = config.chi
    r1 = rng.random((n, d))
    r2 = rng.random((n, d))
    gbest = swarm.pbest_positions[swarm.gbest_index]
    velocity = chi * (
        swarm.velocities
        + config.c1 * r1 * (swarm.pbest_positions - swarm.positions)
        + config.c2 * r2 * (gbest - swarm.positions)
    )
    moved = swarm.positions + velocity
    flight, eval_points, velocity = enforce_mode(
        moved, velocity, problem.bounds, config.mode, rng
    )
    obj, viol = evaluate_many(problem, eval_points, swarm.counter)
    swarm.positions = flight
    swarm.velocities = velocity
    _absorb(swarm, flight, obj, viol)

    if t % 2 == 1:
        trials = build_de_trials(swarm.pbest_positions, swarm.gbest_index, config.cr, rng)
        tflight, teval, _ = enforce_mode(
            trials, swarm.velocities, problem.bounds, config.mode, rng
        )
        tobj, tviol = evaluate_many(problem, teval, swarm.counter)
        _absorb(swarm, tflight, tobj, tviol)


def run(problem: Problem, config: EngineConfig, seed: int) -> RunResult:
    """Execute one full optimization run; bit-reproducible for a fixed seed."""
    rng = np.random.default_rng(seed)
    span = problem.bounds.span
    if isinstance(config, LpsConfig):
        step = lps_step
        vmax_init = config.vmax_fraction * span
    elif isinstance(config, DepsConfig):
        step = deps_step
        vmax_init = 0.5 * span
    else:
        raise InvalidConfigError(f"unsupported engine config: {type(config).__name__}")

    swarm = init_swarm(problem, config.particles, vmax_init, rng)
    for t in range(config.generations):
        step(swarm, problem, t, config, rng)

    best_point = finalize_answer(swarm.gbest_position, problem.bounds, config.mode)
    best_fitness = swarm.gbest_fitness
    return RunResult(
        best_point=best_point,
        best_fitness=best_fitness,
        entered_feasible=best_fitness.feasible,
        evaluations_used=swarm.counter.count,
        seed=seed,
    )
