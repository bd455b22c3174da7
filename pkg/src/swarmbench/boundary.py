"""Boundary handling strategies: clamp, uniform redraw, and periodic wrap.

The periodic strategy never repairs a particle's flight position.  Instead,
out-of-box coordinates are folded back into the box only for evaluation,

    z_d = upper_d - (lower_d - x_d) % span_d   if x_d < lower_d
    z_d = lower_d + (x_d - upper_d) % span_d   if x_d > upper_d
    z_d = x_d                                  otherwise

with a mathematical modulus in [0, span_d).  The swarm effectively flies in
an unbounded tiling of the search box, which removes the artificial mutation
pressure that clamping or redrawing applies at the walls.
"""

from __future__ import annotations

import enum

import numpy as np

from .errors import InvalidInputError
from .problems import BoxBounds


class BoundaryMode(enum.Enum):
    BOUNDARY = "boundary"
    RANDOM = "random"
    PERIODIC = "periodic"

    @classmethod
    def parse(cls, value: "BoundaryMode | str") -> "BoundaryMode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise InvalidInputError(f"unknown boundary mode {value!r}; expected one of: {valid}") from None


def map_periodic(x: np.ndarray, bounds: BoxBounds) -> np.ndarray:
    """Fold coordinates into the box by tiling; identity inside the box.

    Accepts arrays of shape (..., dim).  An exact multiple of the span maps
    onto the opposite face: the wrap identifies ``upper`` with ``lower``.
    """
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != bounds.dim:
        raise InvalidInputError(f"expected last axis of length {bounds.dim}, got {x.shape[-1]}")
    if not np.isfinite(x).all():
        raise InvalidInputError("cannot map non-finite coordinates")
    lower, upper, span = bounds.lower, bounds.upper, bounds.span
    below = x < lower
    above = x > upper
    z = np.where(
        below,
        upper - np.mod(lower - x, span),
        np.where(above, lower + np.mod(x - upper, span), x),
    )
    # One ulp of roundoff in the modulus can land just outside the box.
    return np.clip(z, lower, upper)


def enforce_mode(
    position: np.ndarray,
    velocity: np.ndarray,
    bounds: BoxBounds,
    mode: BoundaryMode,
    rng: np.random.Generator,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Apply one boundary strategy to freshly moved particles.

    Returns ``(flight_position, eval_point, velocity)``.  Shapes (..., dim)
    are accepted; velocity is returned unchanged by every mode.

    - BOUNDARY: out-of-range coordinates clamp onto the violated bound and
      the particle keeps flying from there (flight == eval point).
    - RANDOM: out-of-range coordinates are redrawn uniformly inside their
      interval, consuming one draw per violated coordinate in row-major
      order; nothing is drawn when the position is already inside.
    - PERIODIC: the flight position is left untouched (it may be outside
      the box) and only the evaluation point is folded in.
    """
    position = np.asarray(position, dtype=float)
    if mode is BoundaryMode.BOUNDARY:
        clamped = np.clip(position, bounds.lower, bounds.upper)
        return clamped, clamped, velocity
    if mode is BoundaryMode.RANDOM:
        out = (position < bounds.lower) | (position > bounds.upper)
        if out.any():
            position = position.copy()
            dims = np.nonzero(out)[-1]
            position[out] = rng.uniform(bounds.lower[dims], bounds.upper[dims])
        return position, position, velocity
    eval_point = map_periodic(position, bounds)
    return position, eval_point, velocity


def finalize_answer(
    gbest_position: np.ndarray, bounds: BoxBounds, mode: BoundaryMode
) -> np.ndarray:
    """Map the reported optimum into the box.

    Only the periodic strategy lets the best position drift outside the box,
    so it is folded in; the other modes return the position unchanged.
    """
    gbest_position = np.asarray(gbest_position, dtype=float)
    if mode is BoundaryMode.PERIODIC:
        return map_periodic(gbest_position, bounds)
    return gbest_position
