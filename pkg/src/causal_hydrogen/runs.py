"""Canned simulation drivers shared by the CLI and the check suite."""
from __future__ import annotations

import math

import numpy as np

from .constants import PhysConsts
from .integrator import IntegratorConfig, Trajectory, integrate
from .kinematics import (OrbitGeometry, angular_momentum_trajectory,
                         orbit_geometry, position, speed, velocity)
from .rotation import (RotatedState, RotationConfig, angular_momentum_rotated,
                       eom_rhs, initial_condition, net_force_rotated)
from .wavefunctions import QuantumNumbers, SphericalPoint


def analytic_orbit(geom: OrbitGeometry, consts: PhysConsts,
                   periods: float = 1.0, samples_per_period: int = 2048) -> Trajectory:
    """Closed-form orbit sampled uniformly in time, with v, L and F columns."""
    n_samples = max(1, round(samples_per_period * periods)) + 1
    t = np.linspace(0.0, geom.period * periods, n_samples)
    pos = position(geom, t)
    phis = geom.omega * t + geom.c
    f_mag = consts.m_e * speed(geom) ** 2 / geom.r_0
    force = -f_mag * np.stack([np.cos(phis), np.sin(phis), np.zeros_like(phis)], axis=-1)
    meta = {
        "kind": "orbit",
        "n": geom.qn.n, "l": geom.qn.l, "m": geom.qn.m,
        "r_e_m": geom.r_e, "r_0_m": geom.r_0, "z_0_m": geom.z_0,
        "theta_e_deg": math.degrees(geom.theta_e),
        "period_s": geom.period, "speed_m_per_s": speed(geom),
        "phase_deg": math.degrees(geom.c), "sense": geom.sense,
    }
    return Trajectory(meta=meta, t=t, y=pos, observed={
        "velocity": velocity(geom, t),
        "L": angular_momentum_trajectory(geom, t, consts),
        "F_net": force,
    })


def stationary_sample(qn: QuantumNumbers, consts: PhysConsts,
                      point: np.ndarray | None = None) -> Trajectory:
    """Single zero-velocity sample for an m = 0 (or l = 0) state."""
    r_e = qn.n**2 * consts.a_mu / consts.Z
    if point is None:
        point = np.array([0.0, 0.0, r_e])
    point = np.asarray(point, dtype=float)
    meta = {
        "kind": "orbit", "n": qn.n, "l": qn.l, "m": qn.m,
        "r_e_m": float(np.linalg.norm(point)), "stationary": True,
        "speed_m_per_s": 0.0,
    }
    zeros = np.zeros((1, 3))
    return Trajectory(meta=meta, t=np.zeros(1), y=point[None, :], observed={
        "velocity": zeros.copy(), "L": zeros.copy(), "F_net": zeros.copy(),
    })


def rotated_orbit(m: int, beta: float, consts: PhysConsts,
                  periods: float = 1.0, dt_divisor: int = 2048,
                  record_every: int = 8, r_e: float | None = None,
                  phase: float = math.pi / 2.0) -> Trajectory:
    """RK4 trajectory of the rotated (2,1,m) state from the matched start point.

    The step is dt = T / dt_divisor with T the unrotated orbit period; the
    default phase pi/2 starts the electron at primed coordinates
    (-z_0 sin b, r_0, z_0 cos b).
    """
    qn = QuantumNumbers(2, 1, m)
    geom = orbit_geometry(qn, consts, r_e=r_e, phase=phase)
    state = RotatedState(m=m, beta=beta)
    config = RotationConfig(beta)
    y0 = initial_condition(m, geom, config)
    dt = geom.period / dt_divisor
    steps = max(1, round(dt_divisor * periods))

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        return eom_rhs(state, y, consts)

    traj = integrate(rhs, y0, IntegratorConfig(dt=dt, steps=steps, record_every=record_every),
                     observers={
                         "velocity": lambda t, y: eom_rhs(state, y, consts),
                         "L": lambda t, y: angular_momentum_rotated(state, y, consts),
                         "F_net": lambda t, y: net_force_rotated(state, y, consts),
                     })
    closure = float(np.linalg.norm(traj.y[-1] - traj.y[0])) / geom.r_e
    meta = {
        "kind": "rotated-orbit", "n": 2, "l": 1, "m": m,
        "beta_deg": math.degrees(beta), "r_e_m": geom.r_e, "r_0_m": geom.r_0,
        "z_0_m": geom.z_0, "theta_e_deg": math.degrees(geom.theta_e),
        "period_s": geom.period, "dt_s": dt, "steps": steps,
        "phase_deg": math.degrees(phase),
        "closure_error_rel": closure if periods == int(periods) else None,
    }
    return Trajectory(meta=meta, t=traj.t, y=traj.y, observed=traj.observed)


def field_grid_points(r_values, theta_values, phi_values):
    """Cartesian product of spherical grid axes as SphericalPoint list."""
    points = []
    for r in r_values:
        for theta in theta_values:
            for phi in phi_values:
                points.append(SphericalPoint(r=float(r), theta=float(theta), phi=float(phi)))
    return points
