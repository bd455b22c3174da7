import numpy as np
import pytest
from hypothesis import given, strategies as st

from swarmbench.benchmarks import get_problem
from swarmbench.errors import EvaluationError, InvalidInputError
from swarmbench.problems import (
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

from conftest import random_fitnesses


class TestBoxBounds:
    def test_rejects_inverted_bounds(self):
        with pytest.raises(InvalidInputError):
            BoxBounds(np.array([0.0, 5.0]), np.array([10.0, 5.0]))

    def test_rejects_length_mismatch(self):
        with pytest.raises(InvalidInputError):
            BoxBounds(np.zeros(2), np.ones(3))

    def test_span_positive(self, box10):
        assert (box10.span == 10.0).all()
        assert box10.dim == 2


class TestEvaluate:
    def test_sphere_minimum(self):
        sphere = get_problem("sphere").problem
        fit = evaluate(sphere, np.zeros(5))
        assert fit.objective == 0.0
        assert fit.violation == 0.0
        assert fit.feasible

    def test_g08_known_best_in_minimization_sense(self):
        p = get_problem("g08").problem
        fit = evaluate(p, np.asarray(p.known_best_point))
        # maximization problems store the negated objective
        assert fit.objective == pytest.approx(-0.095825, abs=1e-4)
        assert fit.violation <= 1e-6

    def test_single_constraint_violation_sums_positive_parts(self, line_problem):
        fit = evaluate(line_problem, np.array([3.0]))
        assert fit.violation == 2.0
        assert not fit.feasible

    def test_dimension_mismatch(self, line_problem):
        with pytest.raises(InvalidInputError):
            evaluate(line_problem, np.array([1.0, 2.0]))

    def test_point_outside_box(self, line_problem):
        with pytest.raises(InvalidInputError):
            evaluate(line_problem, np.array([60.0]))

    def test_non_finite_value_raises_with_point(self):
        p = Problem(
            name="bad",
            bounds=BoxBounds(np.array([0.0]), np.array([1.0])),
            objective=lambda x: x[..., 0] / 0.0,
        )
        with np.errstate(divide="ignore", invalid="ignore"):
            with pytest.raises(EvaluationError) as err:
                evaluate(p, np.array([0.5]))
        assert err.value.point is not None

    def test_counter_increments(self, sphere2):
        counter = EvalCounter()
        evaluate(sphere2, np.zeros(2), counter)
        assert counter.count == 1
        evaluate_many(sphere2, np.zeros((7, 2)), counter)
        assert counter.count == 8

    def test_pure_bit_identical(self):
        p = get_problem("g06").problem
        x = np.array([14.2, 1.7])
        a = evaluate(p, x)
        b = evaluate(p, x)
        assert a.objective == b.objective and a.violation == b.violation

    def test_maximize_negation_keeps_argmax(self):
        p = Problem(
            name="maxline",
            bounds=BoxBounds(np.array([0.0]), np.array([10.0])),
            objective=lambda x: x[..., 0],
            sense=Sense.MAXIMIZE,
        )
        lo = evaluate(p, np.array([3.0]))
        hi = evaluate(p, np.array([7.0]))
        assert deb_compare(hi, lo) is Comparison.A_BETTER


class TestDebCompare:
    def test_feasible_beats_infeasible(self):
        a = Fitness(5.0, 0.0)
        b = Fitness(1.0, 0.1)
        assert deb_compare(a, b) is Comparison.A_BETTER

    def test_feasible_pair_by_objective(self):
        assert deb_compare(Fitness(2.0, 0.0), Fitness(3.0, 0.0)) is Comparison.A_BETTER

    def test_identical_inputs_tie(self):
        f = Fitness(1.0, 0.5)
        assert deb_compare(f, f) is Comparison.TIE

    def test_infeasible_pair_by_violation(self):
        assert deb_compare(Fitness(0.0, 0.2), Fitness(9.0, 0.7)) is Comparison.A_BETTER

    def test_infeasible_pair_ignores_objective(self):
        # worse objective but smaller violation still wins
        assert deb_compare(Fitness(99.0, 0.1), Fitness(0.0, 0.2)) is Comparison.A_BETTER

    @given(
        st.floats(allow_nan=False, allow_infinity=False, width=32),
        st.floats(min_value=0.0, max_value=1e6),
        st.floats(allow_nan=False, allow_infinity=False, width=32),
        st.floats(min_value=0.0, max_value=1e6),
    )
    def test_antisymmetric(self, oa, va, ob, vb):
        a, b = Fitness(oa, va), Fitness(ob, vb)
        ab, ba = deb_compare(a, b), deb_compare(b, a)
        flipped = {
            Comparison.A_BETTER: Comparison.B_BETTER,
            Comparison.B_BETTER: Comparison.A_BETTER,
            Comparison.TIE: Comparison.TIE,
        }
        assert ba is flipped[ab]

    def test_transitive_on_random_triples(self):
        rng = np.random.default_rng(11)
        fits = random_fitnesses(rng, 3000)
        order = {Comparison.A_BETTER: 1, Comparison.TIE: 0, Comparison.B_BETTER: -1}
        for a, b, c in zip(fits[0::3], fits[1::3], fits[2::3]):
            ab, bc, ac = deb_compare(a, b), deb_compare(b, c), deb_compare(a, c)
            if order[ab] >= 0 and order[bc] >= 0:
                assert order[ac] >= 0
            if order[ab] > 0 and order[bc] >= 0 or order[ab] >= 0 and order[bc] > 0:
                assert order[ac] > 0


class TestVectorizedComparator:
    def test_matches_scalar_compare(self):
        rng = np.random.default_rng(3)
        a = random_fitnesses(rng, 5000)
        b = random_fitnesses(rng, 5000)
        mask = deb_improves(
            np.array([f.objective for f in a]),
            np.array([f.violation for f in a]),
            np.array([f.objective for f in b]),
            np.array([f.violation for f in b]),
        )
        for fa, fb, m in zip(a, b, mask):
            assert m == (deb_compare(fa, fb) is Comparison.A_BETTER)

    def test_argbest_prefers_feasible_and_lowest_index(self):
        obj = np.array([5.0, 1.0, 1.0, -9.0])
        viol = np.array([0.0, 0.0, 0.0, 2.0])
        assert deb_argbest(obj, viol) == 1  # first of the tied feasible pair
        assert deb_argbest(np.array([0.0, 0.0]), np.array([3.0, 1.0])) == 1
