import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from causal_hydrogen.constants import default_constants
from causal_hydrogen.errors import (NodeError, SingularityError,
                                    StationaryElectronError)
from causal_hydrogen.kinematics import (CLOCKWISE, COUNTERCLOCKWISE,
                                        angular_momentum,
                                        angular_momentum_trajectory,
                                        bohr_energy, bohr_kinetic,
                                        coulomb_potential, energy_report,
                                        field_sample, l_squared,
                                        momentum_field, net_force,
                                        orbit_geometry, phase_s, position,
                                        quantum_potential_numeric, speed,
                                        velocity)
from causal_hydrogen.wavefunctions import QuantumNumbers, SphericalPoint

_CONSTS = default_constants()


def test_orbit_geometry_cone_angles(consts):
    geom = orbit_geometry(QuantumNumbers(2, 1, 1), consts)
    assert math.cos(geom.alpha) == pytest.approx(1.0 / math.sqrt(2.0), rel=1e-14)
    assert math.degrees(geom.theta_e) == pytest.approx(45.0, abs=1e-10)
    assert geom.sense == COUNTERCLOCKWISE
    mirror = orbit_geometry(QuantumNumbers(2, 1, -1), consts)
    assert math.degrees(mirror.theta_e) == pytest.approx(135.0, abs=1e-10)
    assert mirror.z_0 == pytest.approx(-geom.z_0, rel=1e-14)
    assert mirror.sense == CLOCKWISE
    assert mirror.omega == pytest.approx(-geom.omega, rel=1e-14)


@pytest.mark.parametrize("n,l,m", [(2, 1, 0), (1, 0, 0), (3, 0, 0)])
def test_orbit_geometry_stationary_states_raise(consts, n, l, m):
    with pytest.raises(StationaryElectronError):
        orbit_geometry(QuantumNumbers(n, l, m), consts)


def test_orbit_geometry_radius_override_and_validation(consts):
    geom = orbit_geometry(QuantumNumbers(2, 1, 1), consts, r_e=1e-10)
    assert geom.r_e == 1e-10
    with pytest.raises(ValueError):
        orbit_geometry(QuantumNumbers(2, 1, 1), consts, r_e=-1e-10)


def test_position_velocity_shapes_and_derivative(consts):
    geom = orbit_geometry(QuantumNumbers(4, 3, 2), consts, phase=0.3)
    assert position(geom, 0.0).shape == (3,)
    ts = np.linspace(0.0, geom.period, 7)
    assert position(geom, ts).shape == (7, 3)
    assert velocity(geom, ts).shape == (7, 3)
    h = geom.period * 1e-6
    for t in (0.0, 0.37 * geom.period):
        fd = (position(geom, t + h) - position(geom, t - h)) / (2.0 * h)
        assert fd == pytest.approx(velocity(geom, t), rel=1e-8)
    assert float(np.linalg.norm(velocity(geom, 0.0))) == pytest.approx(
        speed(geom), rel=1e-14)


def test_momentum_field_direction_and_magnitude(consts):
    qn = QuantumNumbers(2, 1, 1)
    p = SphericalPoint(3e-10, 1.2, 0.4)
    grad = momentum_field(qn, p, consts)
    assert float(np.linalg.norm(grad)) == pytest.approx(
        consts.hbar / (p.r * math.sin(p.theta)), rel=1e-14)
    # azimuthal direction: orthogonal to the cylinder radius and to z
    assert grad @ np.array([math.cos(p.phi), math.sin(p.phi), 0.0]) == pytest.approx(0.0, abs=1e-30)
    assert grad[2] == 0.0
    assert momentum_field(QuantumNumbers(2, 1, 0), p, consts) == pytest.approx(np.zeros(3))


def test_momentum_field_singularities(consts):
    qn = QuantumNumbers(2, 1, 1)
    with pytest.raises(SingularityError):
        momentum_field(qn, SphericalPoint(1e-10, 0.0, 0.0), consts)
    with pytest.raises(SingularityError):
        momentum_field(qn, SphericalPoint(0.0, 1.0, 0.0), consts)


def test_angular_momentum_is_r_cross_gradS(consts):
    qn = QuantumNumbers(3, 2, -2)
    p = SphericalPoint(4e-10, 0.9, 2.2)
    lvec = angular_momentum(qn, p, consts)
    ref = np.cross(p.to_cartesian(), momentum_field(qn, p, consts))
    assert lvec == pytest.approx(ref, rel=1e-12)
    assert lvec[2] == qn.m * consts.hbar


def test_l_squared_on_cone(consts):
    for l, m in [(1, 1), (3, -2), (4, 4)]:
        qn = QuantumNumbers(l + 1, l, m)
        geom = orbit_geometry(qn, consts)
        assert l_squared(qn, geom.theta_e, consts) == pytest.approx(
            l * (l + 1) * consts.hbar**2, rel=1e-12)
    assert l_squared(QuantumNumbers(2, 1, 0), 1.0, consts) == 0.0


def test_angular_momentum_trajectory_precesses_with_orbit(consts):
    geom = orbit_geometry(QuantumNumbers(2, 1, 1), consts)
    ts = np.linspace(0.0, 2.0 * geom.period, 9)
    ltraj = angular_momentum_trajectory(geom, ts, consts)
    ref = np.cross(position(geom, ts), consts.m_e * velocity(geom, ts))
    assert ltraj == pytest.approx(ref, rel=1e-12)
    # constant magnitude sqrt(l(l+1)) hbar, constant L_z = m hbar
    assert np.linalg.norm(ltraj, axis=1) == pytest.approx(
        math.sqrt(2.0) * consts.hbar, rel=1e-12)
    assert ltraj[:, 2] == pytest.approx(consts.hbar, rel=1e-14)


def test_coulomb_potential_and_bohr_kinetic(consts):
    r = 4.0 * consts.a_mu
    v = coulomb_potential(r, consts)
    assert v == pytest.approx(-consts.e_charge**2 / (4.0 * math.pi * consts.eps0 * r),
                              rel=1e-14)
    with pytest.raises(SingularityError):
        coulomb_potential(0.0, consts)
    assert bohr_kinetic(2, consts) == -bohr_energy(2, consts)


def test_energy_report_closure_and_virial(consts):
    for m in (1, -1, 0):
        rep = energy_report(QuantumNumbers(2, 1, m), consts)
        assert rep.E_n - rep.KE_CI - rep.V - rep.Q == 0.0
        assert rep.E_CI == rep.E_n - rep.phi_term
    # at r_e = n^2 a_mu the potential is twice the total energy
    rep = energy_report(QuantumNumbers(2, 1, 1), consts)
    assert rep.V == pytest.approx(2.0 * rep.E_n, rel=1e-9)


def test_net_force_is_centripetal(consts):
    qn = QuantumNumbers(2, 1, -1)
    geom = orbit_geometry(qn, consts)
    p = SphericalPoint(geom.r_e, geom.theta_e, 1.3)
    f = net_force(qn, p, consts)
    assert float(np.linalg.norm(f)) == pytest.approx(
        consts.m_e * speed(geom) ** 2 / geom.r_0, rel=1e-12)
    assert f[2] == 0.0
    assert net_force(QuantumNumbers(2, 1, 0), p, consts) == pytest.approx(np.zeros(3))


def test_quantum_potential_numeric_m0_matches_energy_balance(consts):
    # for a resting electron Q must supply all of E_n - V; the
    # finite-difference value has no closed form anywhere in this path
    qn = QuantumNumbers(2, 1, 0)
    for r_frac in (0.8, 1.0, 1.7):
        p = SphericalPoint(r_frac * 4.0 * consts.a_mu, 1.0, 0.5)
        q_fd = quantum_potential_numeric(qn, p, consts)
        q_ref = bohr_energy(2, consts) - coulomb_potential(p.r, consts)
        assert q_fd == pytest.approx(q_ref, rel=2e-5)


def test_quantum_potential_numeric_residual_is_reduced_mass_term(consts):
    # Q_fd - Q_algebraic = -KE (m_e/mu - 1) exactly: the kinetic term enters
    # the balance with m_e while the Laplacian prefactor carries mu
    qn = QuantumNumbers(2, 1, 1)
    geom = orbit_geometry(qn, consts)
    rep = energy_report(qn, consts)
    predicted = -rep.KE_CI * (consts.m_e / consts.mu - 1.0)
    for phi in (0.0, 2.1):
        p = SphericalPoint(geom.r_e, geom.theta_e, phi)
        resid = quantum_potential_numeric(qn, p, consts) - rep.Q
        assert abs(resid - predicted) < 5e-6 * abs(rep.Q)


def test_quantum_potential_numeric_raises_on_node(consts):
    # rho = 2r/(3 a_mu) = 4 is the radial node of R_31
    qn = QuantumNumbers(3, 1, 0)
    with pytest.raises(NodeError):
        quantum_potential_numeric(qn, SphericalPoint(6.0 * consts.a_mu, 1.1, 0.3), consts)


def test_phase_s_spatial_and_time_slopes(consts):
    qn = QuantumNumbers(2, 1, 1)
    p1 = SphericalPoint(3e-10, 1.0, 0.7)
    p2 = SphericalPoint(3e-10, 1.0, 0.9)
    assert phase_s(qn, p2, consts) - phase_s(qn, p1, consts) == pytest.approx(
        consts.hbar * 0.2, rel=1e-12)
    tau = 1e-15
    rep = energy_report(qn, consts)
    assert phase_s(qn, p1, consts, t=tau) - phase_s(qn, p1, consts) == pytest.approx(
        -rep.E_CI * tau, rel=1e-12)


def test_field_sample_closure(consts):
    qn = QuantumNumbers(2, 1, 1)
    sample = field_sample(qn, SphericalPoint(2.5e-10, 0.8, 0.3), consts)
    ke = float(sample.gradS @ sample.gradS) / (2.0 * consts.m_e)
    assert ke + sample.V + sample.Q == pytest.approx(bohr_energy(2, consts), rel=1e-12)
    assert sample.S == pytest.approx(consts.hbar * 0.3, rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(l=st.integers(min_value=1, max_value=6),
       data=st.data(),
       r_e=st.floats(min_value=1e-11, max_value=1e-8))
def test_orbit_geometry_invariants(l, data, r_e):
    consts = _CONSTS
    m = data.draw(st.integers(min_value=-l, max_value=l).filter(lambda v: v != 0))
    geom = orbit_geometry(QuantumNumbers(l + 1, l, m), consts, r_e=r_e)
    assert geom.r_0**2 + geom.z_0**2 == pytest.approx(r_e**2, rel=1e-12)
    assert math.sin(geom.theta_e) * math.sqrt(l * (l + 1)) == pytest.approx(
        abs(m), rel=1e-12)
    assert math.copysign(1, geom.omega) == math.copysign(1, m)
    assert geom.period * abs(geom.omega) == pytest.approx(2.0 * math.pi, rel=1e-12)
    assert speed(geom) == pytest.approx(abs(geom.omega) * geom.r_0, rel=1e-14)
