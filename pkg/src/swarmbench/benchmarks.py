"""Benchmark registry: eight classic constrained test functions (g01-g10,
inequality-constrained subset) and four engineering design problems (welded
beam, speed reducer, three-bar truss, tension spring), plus an unconstrained
sphere for smoke testing.

Objectives and constraints are transcribed from the standard published
definitions and operate on arrays of shape (..., dim).  Every entry carries
its best-known value and a best-known point; ``verify_optima`` re-evaluates
the points as a transcription self-check and must pass before the registry
is trusted for experiments.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import UnknownProblemError
from .problems import BoxBounds, Problem, Sense, evaluate

# Finite stand-in for a division-by-zero constraint value; such points are
# structurally infeasible, so only finiteness matters.
_BIG = 1e30

FEASIBILITY_TOL = 1e-6


class OptimumLocation(enum.Enum):
    ON_BOUNDARY = "on-boundary"
    NEAR_BOUNDARY = "near-boundary"
    INTERIOR = "interior"


@dataclass(frozen=True)
class BenchmarkEntry:
    problem: Problem
    optimum_location_class: OptimumLocation
    source: str


def _g01() -> BenchmarkEntry:
    """Quadratic objective, nine linear constraints, optimum on the box."""

    def obj(x):
        head = x[..., :4]
        return 5.0 * head.sum(axis=-1) - 5.0 * (head**2).sum(axis=-1) - x[..., 4:13].sum(axis=-1)

    cons = (
        lambda x: 2 * x[..., 0] + 2 * x[..., 1] + x[..., 9] + x[..., 10] - 10,
        lambda x: 2 * x[..., 0] + 2 * x[..., 2] + x[..., 9] + x[..., 11] - 10,
        lambda x: 2 * x[..., 1] + 2 * x[..., 2] + x[..., 10] + x[..., 11] - 10,
        lambda x: -8 * x[..., 0] + x[..., 9],
        lambda x: -8 * x[..., 1] + x[..., 10],
        lambda x: -8 * x[..., 2] + x[..., 11],
        lambda x: -2 * x[..., 3] - x[..., 4] + x[..., 9],
        lambda x: -2 * x[..., 5] - x[..., 6] + x[..., 10],
        lambda x: -2 * x[..., 7] - x[..., 8] + x[..., 11],
    )
    lower = np.zeros(13)
    upper = np.array([1.0] * 9 + [100.0] * 3 + [1.0])
    problem = Problem(
        name="g01",
        bounds=BoxBounds(lower, upper),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=-15.0,
        known_best_point=(1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1),
    )
    return BenchmarkEntry(problem, OptimumLocation.ON_BOUNDARY, "Michalewicz & Schoenauer (1996)")


def _g02() -> BenchmarkEntry:
    """20-D trigonometric ratio, maximized; product constraint is active."""

    def obj(x):
        cos = np.cos(x)
        num = np.abs((cos**4).sum(axis=-1) - 2.0 * np.prod(cos**2, axis=-1))
        weights = np.arange(1, x.shape[-1] + 1, dtype=float)
        denom = np.sqrt((weights * x**2).sum(axis=-1))
        ok = denom > 0.0
        # undefined at the all-zero corner; that corner violates g1 anyway
        return np.where(ok, num / np.where(ok, denom, 1.0), 0.0)

    cons = (
        lambda x: 0.75 - np.prod(x, axis=-1),
        lambda x: x.sum(axis=-1) - 7.5 * x.shape[-1],
    )
    problem = Problem(
        name="g02",
        bounds=BoxBounds(np.zeros(20), np.full(20, 10.0)),
        objective=obj,
        constraints=cons,
        sense=Sense.MAXIMIZE,
        known_best_value=0.80362,
        known_best_point=(
            3.16246061572185, 3.12833142812967, 3.09479212988791, 3.06145059523469,
            3.02792915885555, 2.99382606701730, 2.95866871765285, 2.92184227312450,
            0.49482511456933, 0.48835711005490, 0.48231642711865, 0.47664475092742,
            0.47129550835493, 0.46623099264167, 0.46142004984199, 0.45683664767217,
            0.45245876903267, 0.44826762241853, 0.44424700958760, 0.44038285956317,
        ),
    )
    return BenchmarkEntry(problem, OptimumLocation.NEAR_BOUNDARY, "Michalewicz & Schoenauer (1996)")


def _g04() -> BenchmarkEntry:
    """Himmelblau's nonlinear problem; optimum sits on three box faces."""

    def obj(x):
        return (
            5.3578547 * x[..., 2] ** 2
            + 0.8356891 * x[..., 0] * x[..., 4]
            + 37.293239 * x[..., 0]
            - 40792.141
        )

    cons = (
        lambda x: 85.334407 + 0.0056858 * x[..., 1] * x[..., 4] + 0.0006262 * x[..., 0] * x[..., 3]
        - 0.0022053 * x[..., 2] * x[..., 4] - 92.0,
        lambda x: -85.334407 - 0.0056858 * x[..., 1] * x[..., 4] - 0.0006262 * x[..., 0] * x[..., 3]
        + 0.0022053 * x[..., 2] * x[..., 4],
        lambda x: 80.51249 + 0.0071317 * x[..., 1] * x[..., 4] + 0.0029955 * x[..., 0] * x[..., 1]
        + 0.0021813 * x[..., 2] ** 2 - 110.0,
        lambda x: -80.51249 - 0.0071317 * x[..., 1] * x[..., 4] - 0.0029955 * x[..., 0] * x[..., 1]
        - 0.0021813 * x[..., 2] ** 2 + 90.0,
        lambda x: 9.300961 + 0.0047026 * x[..., 2] * x[..., 4] + 0.0012547 * x[..., 0] * x[..., 2]
        + 0.0019085 * x[..., 2] * x[..., 3] - 25.0,
        lambda x: -9.300961 - 0.0047026 * x[..., 2] * x[..., 4] - 0.0012547 * x[..., 0] * x[..., 2]
        - 0.0019085 * x[..., 2] * x[..., 3] + 20.0,
    )
    problem = Problem(
        name="g04",
        bounds=BoxBounds(np.array([78.0, 33.0, 27.0, 27.0, 27.0]),
                         np.array([102.0, 45.0, 45.0, 45.0, 45.0])),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=-30665.54,
        known_best_point=(78.0, 33.0, 29.9952560256815985, 45.0, 36.7758129057882073),
    )
    return BenchmarkEntry(problem, OptimumLocation.ON_BOUNDARY, "Michalewicz & Schoenauer (1996)")


def _g06() -> BenchmarkEntry:
    """Cubic objective over a sliver between two circles."""

    def obj(x):
        return (x[..., 0] - 10.0) ** 3 + (x[..., 1] - 20.0) ** 3

    cons = (
        lambda x: -((x[..., 0] - 5.0) ** 2) - (x[..., 1] - 5.0) ** 2 + 100.0,
        lambda x: (x[..., 0] - 6.0) ** 2 + (x[..., 1] - 5.0) ** 2 - 82.81,
    )
    problem = Problem(
        name="g06",
        bounds=BoxBounds(np.array([13.0, 0.0]), np.array([100.0, 100.0])),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=-6961.814,
        known_best_point=(14.095, 0.8429607892154796),
    )
    return BenchmarkEntry(problem, OptimumLocation.NEAR_BOUNDARY, "Michalewicz & Schoenauer (1996)")


def _g07() -> BenchmarkEntry:
    """10-D quadratic with eight mixed constraints."""

    def obj(x):
        return (
            x[..., 0] ** 2 + x[..., 1] ** 2 + x[..., 0] * x[..., 1]
            - 14 * x[..., 0] - 16 * x[..., 1]
            + (x[..., 2] - 10) ** 2 + 4 * (x[..., 3] - 5) ** 2 + (x[..., 4] - 3) ** 2
            + 2 * (x[..., 5] - 1) ** 2 + 5 * x[..., 6] ** 2 + 7 * (x[..., 7] - 11) ** 2
            + 2 * (x[..., 8] - 10) ** 2 + (x[..., 9] - 7) ** 2 + 45
        )

    cons = (
        lambda x: -105 + 4 * x[..., 0] + 5 * x[..., 1] - 3 * x[..., 6] + 9 * x[..., 7],
        lambda x: 10 * x[..., 0] - 8 * x[..., 1] - 17 * x[..., 6] + 2 * x[..., 7],
        lambda x: -8 * x[..., 0] + 2 * x[..., 1] + 5 * x[..., 8] - 2 * x[..., 9] - 12,
        lambda x: 3 * (x[..., 0] - 2) ** 2 + 4 * (x[..., 1] - 3) ** 2 + 2 * x[..., 2] ** 2
        - 7 * x[..., 3] - 120,
        lambda x: 5 * x[..., 0] ** 2 + 8 * x[..., 1] + (x[..., 2] - 6) ** 2 - 2 * x[..., 3] - 40,
        lambda x: x[..., 0] ** 2 + 2 * (x[..., 1] - 2) ** 2 - 2 * x[..., 0] * x[..., 1]
        + 14 * x[..., 4] - 6 * x[..., 5],
        lambda x: 0.5 * (x[..., 0] - 8) ** 2 + 2 * (x[..., 1] - 4) ** 2 + 3 * x[..., 4] ** 2
        - x[..., 5] - 30,
        lambda x: -3 * x[..., 0] + 6 * x[..., 1] + 12 * (x[..., 8] - 8) ** 2 - 7 * x[..., 9],
    )
    problem = Problem(
        name="g07",
        bounds=BoxBounds(np.full(10, -10.0), np.full(10, 10.0)),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=24.306,
        known_best_point=(
            2.17199634142692, 2.3636830416034, 8.77392573913157, 5.09598443745173,
            0.990654756560493, 1.43057392853463, 1.32164415364306, 9.82872576524495,
            8.2800915887356, 8.3759266477347,
        ),
    )
    return BenchmarkEntry(problem, OptimumLocation.NEAR_BOUNDARY, "Michalewicz & Schoenauer (1996)")


def _g08() -> BenchmarkEntry:
    """Maximized sinc-like ratio; tiny feasible pocket away from the walls."""

    def obj(x):
        x1, x2 = x[..., 0], x[..., 1]
        num = np.sin(2 * np.pi * x1) ** 3 * np.sin(2 * np.pi * x2)
        denom = x1**3 * (x1 + x2)
        ok = denom != 0.0
        # undefined on the x1 = 0 face, which is always infeasible
        return np.where(ok, num / np.where(ok, denom, 1.0), 0.0)

    cons = (
        lambda x: x[..., 0] ** 2 - x[..., 1] + 1.0,
        lambda x: 1.0 - x[..., 0] + (x[..., 1] - 4.0) ** 2,
    )
    problem = Problem(
        name="g08",
        bounds=BoxBounds(np.zeros(2), np.full(2, 10.0)),
        objective=obj,
        constraints=cons,
        sense=Sense.MAXIMIZE,
        known_best_value=0.095825,
        known_best_point=(1.22797135260752599, 4.24537336612274885),
    )
    return BenchmarkEntry(problem, OptimumLocation.INTERIOR, "Michalewicz & Schoenauer (1996)")


def _g09() -> BenchmarkEntry:
    """7-D polynomial with four constraints."""

    def obj(x):
        return (
            (x[..., 0] - 10) ** 2 + 5 * (x[..., 1] - 12) ** 2 + x[..., 2] ** 4
            + 3 * (x[..., 3] - 11) ** 2 + 10 * x[..., 4] ** 6 + 7 * x[..., 5] ** 2
            + x[..., 6] ** 4 - 4 * x[..., 5] * x[..., 6] - 10 * x[..., 5] - 8 * x[..., 6]
        )

    cons = (
        lambda x: 2 * x[..., 0] ** 2 + 3 * x[..., 1] ** 4 + x[..., 2] + 4 * x[..., 3] ** 2
        + 5 * x[..., 4] - 127,
        lambda x: 7 * x[..., 0] + 3 * x[..., 1] + 10 * x[..., 2] ** 2 + x[..., 3] - x[..., 4] - 282,
        lambda x: 23 * x[..., 0] + x[..., 1] ** 2 + 6 * x[..., 5] ** 2 - 8 * x[..., 6] - 196,
        lambda x: 4 * x[..., 0] ** 2 + x[..., 1] ** 2 - 3 * x[..., 0] * x[..., 1]
        + 2 * x[..., 2] ** 2 + 5 * x[..., 5] - 11 * x[..., 6],
    )
    problem = Problem(
        name="g09",
        bounds=BoxBounds(np.full(7, -10.0), np.full(7, 10.0)),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=680.630,
        known_best_point=(
            2.33049935147405174, 1.95137236847114592, -0.477541399510615805,
            4.36572624923625874, -0.624486959100388983, 1.03813099410962173,
            1.5942266780671519,
        ),
    )
    return BenchmarkEntry(problem, OptimumLocation.INTERIOR, "Michalewicz & Schoenauer (1996)")


def _g10() -> BenchmarkEntry:
    """Heat-exchanger design: linear objective, six constraints."""

    def obj(x):
        return x[..., 0] + x[..., 1] + x[..., 2]

    cons = (
        lambda x: -1 + 0.0025 * (x[..., 3] + x[..., 5]),
        lambda x: -1 + 0.0025 * (x[..., 4] + x[..., 6] - x[..., 3]),
        lambda x: -1 + 0.01 * (x[..., 7] - x[..., 4]),
        lambda x: -x[..., 0] * x[..., 5] + 833.33252 * x[..., 3] + 100 * x[..., 0] - 83333.333,
        lambda x: -x[..., 1] * x[..., 6] + 1250 * x[..., 4] + x[..., 1] * x[..., 3]
        - 1250 * x[..., 3],
        lambda x: -x[..., 2] * x[..., 7] + 1250000 + x[..., 2] * x[..., 4] - 2500 * x[..., 4],
    )
    problem = Problem(
        name="g10",
        bounds=BoxBounds(
            np.array([100.0, 1000.0, 1000.0, 10.0, 10.0, 10.0, 10.0, 10.0]),
            np.array([10000.0, 10000.0, 10000.0, 1000.0, 1000.0, 1000.0, 1000.0, 1000.0]),
        ),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=7049.248,
        known_best_point=(
            579.306685017979589, 1359.97067807935605, 5109.97065743133317,
            182.01769963061534, 295.601173702746792, 217.982300369384632,
            286.41652592786852, 395.60117370274673,
        ),
    )
    return BenchmarkEntry(problem, OptimumLocation.INTERIOR, "Michalewicz & Schoenauer (1996)")


def _wb() -> BenchmarkEntry:
    """Welded beam cost; x = (weld height, weld length, bar height, bar width)."""

    def obj(x):
        h, l, t, b = x[..., 0], x[..., 1], x[..., 2], x[..., 3]
        return 1.10471 * h**2 * l + 0.04811 * t * b * (14.0 + l)

    def shear_stress(x):
        h, l, t = x[..., 0], x[..., 1], x[..., 2]
        tau1 = 6000.0 / (np.sqrt(2.0) * h * l)
        half = (h + t) / 2.0
        r = np.sqrt(l**2 / 4.0 + half**2)
        m = 6000.0 * (14.0 + l / 2.0)
        j = 2.0 * np.sqrt(2.0) * h * l * (l**2 / 12.0 + half**2)
        tau2 = m * r / j
        return np.sqrt(tau1**2 + tau1 * tau2 * l / r + tau2**2)

    cons = (
        lambda x: shear_stress(x) - 13600.0,
        lambda x: 504000.0 / (x[..., 2] ** 2 * x[..., 3]) - 30000.0,
        lambda x: x[..., 0] - x[..., 3],
        lambda x: 6000.0 - 64746.022 * (1.0 - 0.0282346 * x[..., 2]) * x[..., 2] * x[..., 3] ** 3,
        lambda x: 2.1952 / (x[..., 2] ** 3 * x[..., 3]) - 0.25,
    )
    problem = Problem(
        name="wb",
        bounds=BoxBounds(np.array([0.125, 0.1, 0.1, 0.1]), np.full(4, 10.0)),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=2.38113,
        known_best_point=(0.24435257, 6.2157922, 8.2939046, 0.24435258),
    )
    return BenchmarkEntry(problem, OptimumLocation.NEAR_BOUNDARY, "Ray & Liew (2003)")


def _sr() -> BenchmarkEntry:
    """Golinski speed reducer weight; eleven constraints."""

    def obj(x):
        x1, x2, x3 = x[..., 0], x[..., 1], x[..., 2]
        x4, x5, x6, x7 = x[..., 3], x[..., 4], x[..., 5], x[..., 6]
        return (
            0.7854 * x1 * x2**2 * (3.3333 * x3**2 + 14.9334 * x3 - 43.0934)
            - 1.508 * x1 * (x6**2 + x7**2)
            + 7.4777 * (x6**3 + x7**3)
            + 0.7854 * (x4 * x6**2 + x5 * x7**2)
        )

    cons = (
        lambda x: 27.0 / (x[..., 0] * x[..., 1] ** 2 * x[..., 2]) - 1.0,
        lambda x: 397.5 / (x[..., 0] * x[..., 1] ** 2 * x[..., 2] ** 2) - 1.0,
        lambda x: 1.93 * x[..., 3] ** 3 / (x[..., 1] * x[..., 2] * x[..., 5] ** 4) - 1.0,
        lambda x: 1.93 * x[..., 4] ** 3 / (x[..., 1] * x[..., 2] * x[..., 6] ** 4) - 1.0,
        lambda x: np.sqrt((745.0 * x[..., 3] / (x[..., 1] * x[..., 2])) ** 2 + 16.9e6)
        / (110.0 * x[..., 5] ** 3) - 1.0,
        lambda x: np.sqrt((745.0 * x[..., 4] / (x[..., 1] * x[..., 2])) ** 2 + 157.5e6)
        / (85.0 * x[..., 6] ** 3) - 1.0,
        lambda x: x[..., 1] * x[..., 2] / 40.0 - 1.0,
        lambda x: 5.0 * x[..., 1] / x[..., 0] - 1.0,
        lambda x: x[..., 0] / (12.0 * x[..., 1]) - 1.0,
        lambda x: (1.5 * x[..., 5] + 1.9) / x[..., 3] - 1.0,
        lambda x: (1.1 * x[..., 6] + 1.9) / x[..., 4] - 1.0,
    )
    problem = Problem(
        name="sr",
        bounds=BoxBounds(
            np.array([2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0]),
            np.array([3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5]),
        ),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=2994.471,
        known_best_point=(
            3.5, 0.7, 17.0, 7.3, 7.715319911478288, 3.350214666096445, 5.286654464979416,
        ),
    )
    return BenchmarkEntry(problem, OptimumLocation.ON_BOUNDARY, "Ray & Liew (2003)")


def _tb() -> BenchmarkEntry:
    """Three-bar truss volume under stress limits; x = member areas."""

    def obj(x):
        return 100.0 * (2.0 * np.sqrt(2.0) * x[..., 0] + x[..., 1])

    load, stress = 2.0, 2.0

    def g1(x):
        x1, x2 = x[..., 0], x[..., 1]
        denom = np.sqrt(2.0) * x1**2 + 2.0 * x1 * x2
        ok = denom > 0.0
        return np.where(ok, load * (np.sqrt(2.0) * x1 + x2) / np.where(ok, denom, 1.0) - stress, _BIG)

    def g2(x):
        x1, x2 = x[..., 0], x[..., 1]
        denom = np.sqrt(2.0) * x1**2 + 2.0 * x1 * x2
        ok = denom > 0.0
        return np.where(ok, load * x2 / np.where(ok, denom, 1.0) - stress, _BIG)

    def g3(x):
        x1, x2 = x[..., 0], x[..., 1]
        denom = np.sqrt(2.0) * x2 + x1
        ok = denom > 0.0
        return np.where(ok, load / np.where(ok, denom, 1.0) - stress, _BIG)

    problem = Problem(
        name="tb",
        bounds=BoxBounds(np.zeros(2), np.ones(2)),
        objective=obj,
        constraints=(g1, g2, g3),
        sense=Sense.MINIMIZE,
        known_best_value=263.8958,
        known_best_point=(0.788675134594813, 0.408248290463863),
    )
    return BenchmarkEntry(problem, OptimumLocation.INTERIOR, "Ray & Liew (2003)")


def _ts() -> BenchmarkEntry:
    """Coil spring weight; x = (wire diameter, coil diameter, active coils)."""

    def obj(x):
        return (x[..., 2] + 2.0) * x[..., 1] * x[..., 0] ** 2

    def g2(x):
        x1, x2 = x[..., 0], x[..., 1]
        denom = 12566.0 * (x2 * x1**3 - x1**4)
        ok = denom != 0.0
        ratio = np.where(ok, (4.0 * x2**2 - x1 * x2) / np.where(ok, denom, 1.0), _BIG)
        return ratio + 1.0 / (5108.0 * x1**2) - 1.0

    cons = (
        lambda x: 1.0 - x[..., 1] ** 3 * x[..., 2] / (71785.0 * x[..., 0] ** 4),
        g2,
        lambda x: 1.0 - 140.45 * x[..., 0] / (x[..., 1] ** 2 * x[..., 2]),
        lambda x: (x[..., 0] + x[..., 1]) / 1.5 - 1.0,
    )
    problem = Problem(
        name="ts",
        bounds=BoxBounds(np.array([0.05, 0.25, 2.0]), np.array([2.0, 1.3, 15.0])),
        objective=obj,
        constraints=cons,
        sense=Sense.MINIMIZE,
        known_best_value=0.012666,
        known_best_point=(0.051689436521433166, 0.35672233796958774, 11.288970074824096),
    )
    return BenchmarkEntry(problem, OptimumLocation.NEAR_BOUNDARY, "Ray & Liew (2003)")


def _sphere() -> BenchmarkEntry:
    problem = Problem(
        name="sphere",
        bounds=BoxBounds(np.full(5, -10.0), np.full(5, 10.0)),
        objective=lambda x: (x**2).sum(axis=-1),
        sense=Sense.MINIMIZE,
        known_best_value=0.0,
        known_best_point=(0.0,) * 5,
    )
    return BenchmarkEntry(problem, OptimumLocation.INTERIOR, "classic smoke test")


REGISTRY: dict[str, BenchmarkEntry] = {
    entry.problem.name: entry
    for entry in (
        _g01(), _g02(), _g04(), _g06(), _g07(), _g08(), _g09(), _g10(),
        _wb(), _sr(), _tb(), _ts(), _sphere(),
    )
}


def problem_names() -> list[str]:
    return list(REGISTRY)


def get_problem(name: str) -> BenchmarkEntry:
    """Look up a benchmark by its lowercase registry name."""
    key = name.lower()
    if key not in REGISTRY:
        valid = ", ".join(problem_names())
        raise UnknownProblemError(f"unknown problem {name!r}; valid names: {valid}")
    return REGISTRY[key]


@dataclass(frozen=True)
class OptimumReport:
    """Transcription self-check result for one registry entry."""

    name: str
    violation: float
    feasible: bool
    value: float
    value_error: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return self.feasible and self.value_error <= self.tolerance


def verify_entry(entry: BenchmarkEntry) -> OptimumReport:
    """Re-evaluate the stored best-known point against the stored best value."""
    p = entry.problem
    fit = evaluate(p, np.asarray(p.known_best_point, dtype=float))
    value = -fit.objective if p.sense is Sense.MAXIMIZE else fit.objective
    target = p.known_best_value
    return OptimumReport(
        name=p.name,
        violation=fit.violation,
        feasible=fit.violation <= FEASIBILITY_TOL,
        value=value,
        value_error=abs(value - target),
        tolerance=1e-2 * max(1.0, abs(target)),
    )


def verify_optima() -> list[OptimumReport]:
    """Self-check every registry entry; all reports must be ok before use."""
    return [verify_entry(entry) for entry in REGISTRY.values()]
