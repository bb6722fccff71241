"""Causal-model kinematics for unrotated eigenstates.

The guidance law p = grad S turns each psi_nlm with m != 0 into uniform
circular motion at fixed radius r_e and fixed polar angle theta_e selected
by the angular-momentum vector model (cos alpha = m / sqrt(l(l+1))).
m = 0 states have grad S = 0: the electron is stationary.

This module supplies the closed-form orbit geometry, trajectories, field
layer (momentum, angular momentum, net force, quantum potential) and the
energy bookkeeping of the model.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import PhysConsts
from .errors import NodeError, SingularityError, StationaryElectronError
from .wavefunctions import (QuantumNumbers, SphericalPoint, assoc_legendre,
                            bohr_energy, radial, sph_norm)

__all__ = [
    "OrbitGeometry", "EnergyReport", "FieldSample",
    "orbit_geometry", "position", "velocity", "speed",
    "momentum_field", "angular_momentum", "angular_momentum_trajectory",
    "l_squared", "bohr_energy", "bohr_kinetic", "coulomb_potential",
    "energy_report", "net_force", "quantum_potential_numeric",
    "phase_s", "field_sample",
]

COUNTERCLOCKWISE = "counterclockwise"
CLOCKWISE = "clockwise"


@dataclass(frozen=True)
class OrbitGeometry:
    """Derived constants of one m != 0 orbit.

    alpha is the vector-model cone angle, theta_e the fixed polar angle,
    r_0/z_0 the orbit radius and plane height, omega the signed azimuthal
    rate d(phi)/dt and c the phase constant: phi(t) = omega t + c.
    """

    qn: QuantumNumbers
    alpha: float      # rad
    theta_e: float    # rad
    r_e: float        # m
    r_0: float        # m
    z_0: float        # m, signed
    omega: float      # rad/s, signed
    c: float          # rad
    period: float     # s
    sense: str        # counterclockwise | clockwise


@dataclass(frozen=True)
class EnergyReport:
    """Energy bookkeeping of one state at radius r_e (all in J).

    E_n = phi_term + E_CI splits the Bohr energy into the azimuthal-phase
    contribution phi_term = -m hbar d(phi)/dt and the residual E_CI;
    Q = E_n - KE_CI - V closes the Hamilton-Jacobi balance.
    """

    E_n: float
    phi_term: float
    E_CI: float
    KE_CI: float
    KE_Bohr: float
    V: float
    Q: float


@dataclass(frozen=True)
class FieldSample:
    """Field layer evaluated at one spacetime point."""

    point: SphericalPoint
    S: float             # J s
    gradS: np.ndarray    # kg m/s
    Q: float             # J
    V: float             # J
    F_net: np.ndarray    # N
    L: np.ndarray        # kg m^2/s


def orbit_geometry(qn: QuantumNumbers, consts: PhysConsts,
                   r_e: float | None = None, phase: float = 0.0) -> OrbitGeometry:
    """Unique orbit geometry for (l, m); r_e defaults to the D_nl mode n^2 a_mu / Z."""
    if qn.m == 0 or qn.l == 0:
        raise StationaryElectronError(
            f"state (n={qn.n}, l={qn.l}, m={qn.m}) has grad S = 0: the electron "
            "is stationary and defines no orbit")
    if r_e is None:
        r_e = qn.n**2 * consts.a_mu / consts.Z
    if r_e <= 0.0:
        raise ValueError(f"r_e must be > 0, got {r_e}")
    alpha = math.acos(qn.m / math.sqrt(qn.l * (qn.l + 1)))
    theta_e = math.pi / 2.0 - alpha if qn.m > 0 else 3.0 * math.pi / 2.0 - alpha
    sin_te = math.sin(theta_e)
    omega = qn.m * consts.hbar / (consts.m_e * r_e**2 * sin_te**2)
    return OrbitGeometry(
        qn=qn, alpha=alpha, theta_e=theta_e, r_e=r_e,
        r_0=r_e * sin_te, z_0=r_e * math.cos(theta_e),
        omega=omega, c=phase, period=2.0 * math.pi / abs(omega),
        sense=COUNTERCLOCKWISE if qn.m > 0 else CLOCKWISE)


def position(geom: OrbitGeometry, t):
    """Orbit position at time t (scalar -> shape (3,), array -> shape (N, 3))."""
    ph = geom.omega * np.asarray(t, dtype=float) + geom.c
    out = np.stack([geom.r_0 * np.cos(ph),
                    geom.r_0 * np.sin(ph),
                    np.broadcast_to(geom.z_0, np.shape(ph))], axis=-1)
    return out


def velocity(geom: OrbitGeometry, t):
    """d(position)/dt at time t; same shape convention as position()."""
    ph = geom.omega * np.asarray(t, dtype=float) + geom.c
    v0 = geom.r_0 * geom.omega
    return np.stack([-v0 * np.sin(ph),
                     v0 * np.cos(ph),
                     np.zeros(np.shape(ph))], axis=-1)


def speed(geom: OrbitGeometry) -> float:
    """Constant orbital speed |m| hbar / (m_e r_e sin theta_e)."""
    return abs(geom.omega) * geom.r_0


def momentum_field(qn: QuantumNumbers, p: SphericalPoint, consts: PhysConsts) -> np.ndarray:
    """grad S = (m hbar / (r sin theta)) * e_phi; zero vector for m = 0."""
    if qn.m == 0:
        return np.zeros(3)
    sin_t = math.sin(p.theta)
    if p.r == 0.0 or sin_t == 0.0:
        raise SingularityError(f"momentum of an m != 0 state diverges at r sin(theta) = 0 "
                               f"(r={p.r}, theta={p.theta})")
    scale = qn.m * consts.hbar / (p.r * sin_t)
    return scale * np.array([-math.sin(p.phi), math.cos(p.phi), 0.0])


def angular_momentum(qn: QuantumNumbers, p: SphericalPoint, consts: PhysConsts) -> np.ndarray:
    """L = r x grad S = -(m hbar / sin theta) e_theta; zero vector for m = 0."""
    if qn.m == 0:
        return np.zeros(3)
    sin_t = math.sin(p.theta)
    if sin_t == 0.0:
        raise SingularityError(f"L of an m != 0 state diverges at theta={p.theta}")
    mh = qn.m * consts.hbar
    cot_t = math.cos(p.theta) / sin_t
    return np.array([-mh * cot_t * math.cos(p.phi),
                     -mh * cot_t * math.sin(p.phi),
                     mh])


def angular_momentum_trajectory(geom: OrbitGeometry, t, consts: PhysConsts):
    """L along the orbit: precession about z at the orbital rate and sense.

    L_x = -m hbar cot(theta_e) cos(omega t + c), likewise L_y with sin,
    L_z = m hbar constant.
    """
    ph = geom.omega * np.asarray(t, dtype=float) + geom.c
    mh = geom.qn.m * consts.hbar
    cot_te = math.cos(geom.theta_e) / math.sin(geom.theta_e)
    return np.stack([-mh * cot_te * np.cos(ph),
                     -mh * cot_te * np.sin(ph),
                     np.broadcast_to(mh, np.shape(ph))], axis=-1)


def l_squared(qn: QuantumNumbers, theta: float, consts: PhysConsts) -> float:
    """L.L = m^2 hbar^2 / sin^2 theta; equals l(l+1) hbar^2 at theta_e. Zero for m = 0."""
    if qn.m == 0:
        return 0.0
    sin_t = math.sin(theta)
    if sin_t == 0.0:
        raise SingularityError(f"L^2 of an m != 0 state diverges at theta={theta}")
    return (qn.m * consts.hbar / sin_t) ** 2


def bohr_kinetic(n: int, consts: PhysConsts) -> float:
    """Bohr-model kinetic energy KE_Bohr = -E_n in J."""
    return -bohr_energy(n, consts)


def coulomb_potential(r: float, consts: PhysConsts) -> float:
    """Electrostatic potential energy V(r) = -Z e^2 / (4 pi eps0 r) in J."""
    if r <= 0.0:
        raise SingularityError(f"Coulomb potential requires r > 0, got {r}")
    return -consts.Z * consts.e_charge**2 / (4.0 * math.pi * consts.eps0 * r)


def energy_report(qn: QuantumNumbers, consts: PhysConsts,
                  r_e: float | None = None) -> EnergyReport:
    """Energy split of the state at radius r_e (default n^2 a_mu / Z).

    For m != 0: phi_term = -m hbar omega = -m_e v^2, E_CI = E_n - phi_term,
    KE_CI = m_e v^2 / 2.  For m = 0 the electron is at rest: phi_term = 0,
    KE_CI = 0, E_CI = E_n.  Always Q = E_n - KE_CI - V(r_e) exactly.
    """
    if r_e is None:
        r_e = qn.n**2 * consts.a_mu / consts.Z
    if r_e <= 0.0:
        raise ValueError(f"r_e must be > 0, got {r_e}")
    e_n = bohr_energy(qn.n, consts)
    v_pot = coulomb_potential(r_e, consts)
    if qn.m == 0:
        phi_term = 0.0
        ke_ci = 0.0
    else:
        sin2_te = qn.m**2 / (qn.l * (qn.l + 1))
        omega = qn.m * consts.hbar / (consts.m_e * r_e**2 * sin2_te)
        phi_term = -qn.m * consts.hbar * omega
        ke_ci = -phi_term / 2.0
    return EnergyReport(E_n=e_n, phi_term=phi_term, E_CI=e_n - phi_term,
                        KE_CI=ke_ci, KE_Bohr=-e_n, V=v_pot,
                        Q=e_n - ke_ci - v_pot)


def net_force(qn: QuantumNumbers, p: SphericalPoint, consts: PhysConsts) -> np.ndarray:
    """F_net = -(m^2 hbar^2 / (m_e r^3 sin^3 theta)) (cos phi, sin phi, 0).

    The quantum force plus the Coulomb force: exactly the centripetal force
    of the circular orbit, pointing at the z-axis.  Zero vector for m = 0.
    """
    if qn.m == 0:
        return np.zeros(3)
    sin_t = math.sin(p.theta)
    if p.r == 0.0 or sin_t == 0.0:
        raise SingularityError(f"net force of an m != 0 state diverges at r sin(theta) = 0 "
                               f"(r={p.r}, theta={p.theta})")
    mag = (qn.m * consts.hbar) ** 2 / (consts.m_e * p.r**3 * sin_t**3)
    return -mag * np.array([math.cos(p.phi), math.sin(p.phi), 0.0])


def _real_amplitude_grid(qn: QuantumNumbers, consts: PhysConsts,
                         x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
    """R(x, y, z) = N_sp R_nl(r) P_l^m(z/r), vectorized over Cartesian arrays."""
    r = np.sqrt(x**2 + y**2 + z**2)
    if np.any(r == 0.0):
        raise SingularityError("amplitude stencil touched the origin")
    return (sph_norm(qn.l, qn.m)
            * radial(qn, r, consts)
            * assoc_legendre(qn.l, qn.m, z / r))


def quantum_potential_numeric(qn: QuantumNumbers, p: SphericalPoint,
                              consts: PhysConsts, h_rel: float = 1e-4) -> float:
    """Q = -(hbar^2 / 2 mu) lap(R)/R with a finite-difference Laplacian.

    Fourth-order five-point stencils per Cartesian axis at steps h and 2h,
    combined by one Richardson extrapolation (16 L_h - L_2h)/15.  The
    reduced mass mu is the mass of the wave equation R solves, so this
    matches the algebraic Q = E_n - KE - V to the fd truncation error.
    """
    h = h_rel * consts.a_mu
    center = p.to_cartesian()
    r0 = _real_amplitude_grid(qn, consts, *(np.asarray([v]) for v in center))[0]
    if abs(r0) < 1e-12 * consts.a_mu**-1.5:
        raise NodeError(f"R vanishes at (r={p.r}, theta={p.theta}); Q undefined on the node")

    # 24 offset evaluations: +-h, +-2h, +-2h(doubled)=+-4h per axis
    steps = np.array([1.0, 2.0, -1.0, -2.0, 2.0, 4.0, -2.0, -4.0])
    pts = np.repeat(center[None, :], steps.size * 3, axis=0)
    for axis in range(3):
        pts[axis * steps.size:(axis + 1) * steps.size, axis] += steps * h
    vals = _real_amplitude_grid(qn, consts, pts[:, 0], pts[:, 1], pts[:, 2])
    vals = vals.reshape(3, 2, 4)  # [axis, (h, 2h), (+1, +2, -1, -2)]

    def lap(block: np.ndarray, step: float) -> float:
        # block[:, k] = f at offsets (+step, +2 step, -step, -2 step)
        second = (-block[:, 1] + 16.0 * block[:, 0] - 30.0 * r0
                  + 16.0 * block[:, 2] - block[:, 3]) / (12.0 * step**2)
        return float(second.sum())

    lap_h = lap(vals[:, 0, :], h)
    lap_2h = lap(vals[:, 1, :], 2.0 * h)
    lap_r = (16.0 * lap_h - lap_2h) / 15.0
    return -consts.hbar**2 / (2.0 * consts.mu) * lap_r / r0


def _default_e_ci(qn: QuantumNumbers, consts: PhysConsts) -> float:
    return energy_report(qn, consts).E_CI


def phase_s(qn: QuantumNumbers, p: SphericalPoint, consts: PhysConsts,
            t: float = 0.0, e_ci: float | None = None) -> float:
    """Phase S(phi, t) = m hbar phi - E_CI t in J s.

    The spatial dependence (all the dynamics) is m hbar phi; the time
    coefficient is the residual energy E_CI of the default orbit unless
    given explicitly.
    """
    if e_ci is None:
        e_ci = _default_e_ci(qn, consts)
    return qn.m * consts.hbar * p.phi - e_ci * t


def field_sample(qn: QuantumNumbers, p: SphericalPoint, consts: PhysConsts,
                 t: float = 0.0) -> FieldSample:
    """Evaluate the whole field layer at one spacetime point.

    Q is the algebraic closure E_n - KE - V; use quantum_potential_numeric
    for the finite-difference value.
    """
    grad = momentum_field(qn, p, consts)
    ke = float(grad @ grad) / (2.0 * consts.m_e)
    v_pot = coulomb_potential(p.r, consts)
    return FieldSample(point=p,
                       S=phase_s(qn, p, consts, t),
                       gradS=grad,
                       Q=bohr_energy(qn.n, consts) - ke - v_pot,
                       V=v_pot,
                       F_net=net_force(qn, p, consts),
                       L=angular_momentum(qn, p, consts))
