import math

import numpy as np
import pytest

from causal_hydrogen.errors import NodeError
from causal_hydrogen.integrator import (IntegratorConfig, Trajectory,
                                        integrate, rk4_step)
from causal_hydrogen.verify import convergence_order


def test_rk4_step_exact_for_cubic():
    # RK4 integrates polynomial right-hand sides up to t^3 exactly
    rhs = lambda t, y: np.array([3.0 * t**2, 2.0 * t, 1.0])
    y = rk4_step(rhs, np.zeros(3), 0.0, 0.5)
    assert y == pytest.approx([0.125, 0.25, 0.5], rel=1e-15)


def test_rk4_fourth_order_on_exponential():
    rhs = lambda t, y: -y
    errors = []
    for n in (16, 32, 64):
        y = np.ones(3)
        dt = 1.0 / n
        for i in range(n):
            y = rk4_step(rhs, y, i * dt, dt)
        errors.append(abs(y[0] - math.exp(-1.0)))
    order = convergence_order(np.array(errors))
    assert 3.8 < order < 4.2


def test_integrate_records_start_and_stride():
    rhs = lambda t, y: np.zeros(3)
    traj = integrate(rhs, np.array([1.0, 2.0, 3.0]),
                     IntegratorConfig(dt=0.1, steps=10, record_every=3))
    assert len(traj) == 4                       # steps 0, 3, 6, 9
    assert traj.t == pytest.approx([0.0, 0.3, 0.6, 0.9])
    assert traj.y.shape == (4, 3)
    assert isinstance(traj, Trajectory)


def test_integrate_observers_see_recorded_states():
    rhs = lambda t, y: np.array([1.0, 0.0, 0.0])
    traj = integrate(rhs, np.zeros(3),
                     IntegratorConfig(dt=0.25, steps=8, record_every=2),
                     observers={"double": lambda t, y: 2.0 * y})
    assert traj.observed["double"] == pytest.approx(2.0 * traj.y)
    assert traj.y[:, 0] == pytest.approx(traj.t, rel=1e-14)


def test_integrate_is_deterministic():
    rhs = lambda t, y: np.array([-y[1], y[0], 0.0])
    config = IntegratorConfig(dt=0.01, steps=100, record_every=5)
    a = integrate(rhs, np.array([1.0, 0.0, 0.0]), config)
    b = integrate(rhs, np.array([1.0, 0.0, 0.0]), config)
    assert np.array_equal(a.y, b.y) and np.array_equal(a.t, b.t)


def test_integrate_annotates_model_errors_with_step():
    def rhs(t, y):
        if t > 0.05:
            raise NodeError("synthetic node")
        return np.ones(3)

    with pytest.raises(NodeError, match=r"integration aborted at step \d+"):
        integrate(rhs, np.zeros(3), IntegratorConfig(dt=0.02, steps=10))


def test_integrate_keeps_meta_copy():
    meta = {"kind": "test"}
    traj = integrate(lambda t, y: np.zeros(3), np.zeros(3),
                     IntegratorConfig(dt=1.0, steps=1), meta=meta)
    meta["kind"] = "mutated"
    assert traj.meta["kind"] == "test"


@pytest.mark.parametrize("kwargs", [
    {"dt": 0.0, "steps": 1},
    {"dt": -1.0, "steps": 1},
    {"dt": 1.0, "steps": -1},
    {"dt": 1.0, "steps": 1, "record_every": 0},
])
def test_integrator_config_validation(kwargs):
    with pytest.raises(ValueError):
        IntegratorConfig(**kwargs)
