import numpy as np
import pytest

from swarmbench.cli import ServiceClient
from swarmbench.problems import BoxBounds, Problem, Sense


@pytest.fixture(scope="session")
def client():
    """HTTP client bound to the in-process service."""
    return ServiceClient(server=None)


@pytest.fixture
def box10():
    """The [0, 10]^2 box used by most worked examples."""
    return BoxBounds(np.zeros(2), np.full(2, 10.0))


@pytest.fixture
def line_problem():
    """1-D minimization of -x with one constraint x <= 1."""
    return Problem(
        name="line",
        bounds=BoxBounds(np.array([-50.0]), np.array([50.0])),
        objective=lambda x: -x[..., 0],
        constraints=(lambda x: x[..., 0] - 1.0,),
        sense=Sense.MINIMIZE,
    )


@pytest.fixture
def sphere2():
    """Unconstrained 2-D sphere on [-10, 10]^2."""
    return Problem(
        name="sphere2",
        bounds=BoxBounds(np.full(2, -10.0), np.full(2, 10.0)),
        objective=lambda x: (x**2).sum(axis=-1),
    )


def random_fitnesses(rng, n):
    """Sample fitness values mixing feasible and infeasible candidates."""
    from swarmbench.problems import Fitness

    objs = rng.normal(scale=10.0, size=n)
    viols = np.where(rng.random(n) < 0.45, 0.0, rng.exponential(1.0, n))
    return [Fitness(float(o), float(v)) for o, v in zip(objs, viols)]
