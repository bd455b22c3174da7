import numpy as np
import pytest
from hypothesis import given, strategies as st

from swarmbench.boundary import BoundaryMode, enforce_mode, finalize_answer, map_periodic
from swarmbench.errors import InvalidInputError
from swarmbench.problems import BoxBounds


class TestMapPeriodic:
    def test_identity_inside_box(self, box10):
        assert map_periodic(np.array([5.0, 5.0]), box10)[0] == 5.0

    def test_above_upper_wraps_from_lower(self, box10):
        assert map_periodic(np.array([13.0, 5.0]), box10)[0] == 3.0

    def test_below_lower_wraps_from_upper(self, box10):
        assert map_periodic(np.array([-2.0, 5.0]), box10)[0] == 8.0

    def test_exact_span_multiple_lands_on_lower(self, box10):
        # upper + span folds onto lower: the wrap identifies the two faces
        assert map_periodic(np.array([20.0, 5.0]), box10)[0] == 0.0

    def test_exact_bounds_are_identity(self, box10):
        z = map_periodic(np.array([0.0, 10.0]), box10)
        assert z[0] == 0.0 and z[1] == 10.0

    def test_non_finite_rejected(self, box10):
        with pytest.raises(InvalidInputError):
            map_periodic(np.array([np.inf, 0.0]), box10)

    def test_wrong_length_rejected(self, box10):
        with pytest.raises(InvalidInputError):
            map_periodic(np.array([1.0, 2.0, 3.0]), box10)

    def test_range_and_idempotence_bulk(self):
        bounds = BoxBounds(np.array([-3.0, 0.0, 2.5]), np.array([1.0, 10.0, 2.75]))
        rng = np.random.default_rng(17)
        x = rng.uniform(-1e5, 1e5, size=(100_000, 3))
        z = map_periodic(x, bounds)
        assert ((z >= bounds.lower) & (z <= bounds.upper)).all()
        assert (map_periodic(z, bounds) == z).all()

    def test_periodicity_on_exceeding_branches(self, box10):
        rng = np.random.default_rng(5)
        span = box10.span
        above = rng.uniform(10.0, 200.0, size=(2000, 2))
        below = rng.uniform(-200.0, 0.0, size=(2000, 2))
        for x in (above, below):
            base = map_periodic(x, box10)
            for k in (1, 3, 10):
                shifted = map_periodic(x + np.sign(x - 5.0) * k * span, box10)
                assert np.allclose(shifted, base, rtol=1e-9, atol=1e-9 * span.max())

    @given(st.floats(min_value=-1e12, max_value=1e12, allow_nan=False))
    def test_always_lands_inside(self, value):
        bounds = BoxBounds(np.array([-1.5]), np.array([4.25]))
        z = map_periodic(np.array([value]), bounds)
        assert -1.5 <= z[0] <= 4.25


class TestEnforceMode:
    def test_boundary_clamps_to_violated_bound(self, box10):
        rng = np.random.default_rng(0)
        vel = np.array([1.0, -2.0])
        flight, eval_point, v = enforce_mode(
            np.array([12.0, -1.0]), vel, box10, BoundaryMode.BOUNDARY, rng
        )
        assert (flight == [10.0, 0.0]).all()
        assert (eval_point == flight).all()
        assert (v == vel).all()

    def test_boundary_is_per_dimension_projection(self, box10):
        rng = np.random.default_rng(1)
        x = rng.uniform(-30.0, 40.0, size=(500, 2))
        flight, _, _ = enforce_mode(x, np.zeros_like(x), box10, BoundaryMode.BOUNDARY, rng)
        expected = np.minimum(np.maximum(x, box10.lower), box10.upper)
        assert (flight == expected).all()
        # no in-box probe point is closer to x in any dimension
        probes = rng.uniform(box10.lower, box10.upper, size=(50, 2))
        for z in probes:
            assert (np.abs(flight - x) <= np.abs(z - x) + 1e-12).all()

    def test_periodic_keeps_flight_position(self, box10):
        rng = np.random.default_rng(0)
        flight, eval_point, _ = enforce_mode(
            np.array([12.0, -1.0]), np.zeros(2), box10, BoundaryMode.PERIODIC, rng
        )
        assert (flight == [12.0, -1.0]).all()
        assert np.allclose(eval_point, [2.0, 9.0])

    def test_random_in_range_consumes_no_draws(self, box10):
        rng = np.random.default_rng(9)
        flight, eval_point, _ = enforce_mode(
            np.array([5.0, 5.0]), np.zeros(2), box10, BoundaryMode.RANDOM, rng
        )
        assert (flight == [5.0, 5.0]).all()
        assert rng.random() == np.random.default_rng(9).random()

    def test_random_redraws_only_violated_dimensions(self, box10):
        rng = np.random.default_rng(23)
        x = np.array([11.5, 4.0])
        flight, eval_point, _ = enforce_mode(x, np.zeros(2), box10, BoundaryMode.RANDOM, rng)
        assert flight[1] == 4.0
        assert 0.0 <= flight[0] <= 10.0 and flight[0] != 11.5
        assert (eval_point == flight).all()
        # same seed, same redraw
        again, _, _ = enforce_mode(
            x, np.zeros(2), box10, BoundaryMode.RANDOM, np.random.default_rng(23)
        )
        assert (again == flight).all()

    def test_velocity_never_modified(self, box10):
        vel = np.array([[3.0, -4.0], [0.5, 0.5]])
        x = np.array([[12.0, 5.0], [-3.0, 20.0]])
        for mode in BoundaryMode:
            _, _, v = enforce_mode(x, vel, box10, mode, np.random.default_rng(2))
            assert v is vel


class TestFinalizeAnswer:
    def test_periodic_maps_back_into_box(self, box10):
        assert (finalize_answer(np.array([13.0, 5.0]), box10, BoundaryMode.PERIODIC) == [3.0, 5.0]).all()

    def test_boundary_is_identity(self, box10):
        assert (finalize_answer(np.array([3.0, 5.0]), box10, BoundaryMode.BOUNDARY) == [3.0, 5.0]).all()

    def test_periodic_identity_at_exact_bounds(self, box10):
        assert (finalize_answer(np.array([0.0, 10.0]), box10, BoundaryMode.PERIODIC) == [0.0, 10.0]).all()


class TestModeParsing:
    def test_parse_strings(self):
        assert BoundaryMode.parse("Periodic") is BoundaryMode.PERIODIC
        assert BoundaryMode.parse(BoundaryMode.RANDOM) is BoundaryMode.RANDOM

    def test_parse_unknown(self):
        with pytest.raises(InvalidInputError):
            BoundaryMode.parse("reflect")
