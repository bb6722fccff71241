"""The (2,1,m) states in a frame rotated by beta about the y-axis.

Conventions: the primed frame is the lab frame rotated clockwise by beta
about y, fixed by x = z' sin(beta) + x' cos(beta), z = z' cos(beta) - x' sin(beta),
y = y'.  phi_21m is the eigenstate polynomial stripped of the radial
prefactor; its phase S = hbar arg(phi) drives the equations of motion.
All closed forms below are branch-free rationals in the coordinates, so
trajectories never touch the arctangent cut.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import PhysConsts
from .errors import NodeError, StationaryElectronError
from .kinematics import OrbitGeometry, position

__all__ = [
    "RotationConfig", "RotatedState", "PhaseJet",
    "rotate", "unrotate", "phi_21m", "phase_jet", "eom_rhs",
    "net_force_rotated", "angular_momentum_rotated", "decompose",
    "initial_condition",
]

# Nodal guard: |phi|^2 below this fraction of r_e^2 counts as "on the node".
NODE_TOL = 1e-12


@dataclass(frozen=True)
class RotationConfig:
    """Rotation angle beta (rad) about the y-axis."""

    beta: float

    @property
    def sin(self) -> float:
        return math.sin(self.beta)

    @property
    def cos(self) -> float:
        return math.cos(self.beta)


@dataclass(frozen=True)
class RotatedState:
    """One of the (2,1,m) states, m in {-1, 0, +1}, viewed at angle beta."""

    m: int
    beta: float

    def __post_init__(self) -> None:
        if self.m not in (-1, 0, 1):
            raise ValueError(f"rotated layer treats only m in {{-1, 0, 1}}, got m={self.m}")

    @property
    def config(self) -> RotationConfig:
        return RotationConfig(self.beta)


@dataclass(frozen=True)
class PhaseJet:
    """S with its first and second derivatives at one primed-frame point."""

    S: float              # J s
    grad: np.ndarray      # (3,) kg m/s
    hess: np.ndarray      # (3, 3) kg/s, symmetric


def rotate(config: RotationConfig, v) -> np.ndarray:
    """Lab-frame vector -> primed-frame components: x' = x cos b - z sin b, z' = x sin b + z cos b."""
    x, y, z = np.asarray(v, dtype=float)
    s, c = config.sin, config.cos
    return np.array([x * c - z * s, y, x * s + z * c])


def unrotate(config: RotationConfig, v) -> np.ndarray:
    """Primed-frame vector -> lab-frame components (inverse of rotate)."""
    xp, yp, zp = np.asarray(v, dtype=float)
    s, c = config.sin, config.cos
    return np.array([zp * s + xp * c, yp, zp * c - xp * s])


def phi_21m(state: RotatedState, p) -> complex:
    """Eigenstate polynomial in primed coordinates (radial prefactor stripped).

    m=+1: -(z' sin b + x' cos b + i y'); m=0: sqrt(2) (z' cos b - x' sin b);
    m=-1: (z' sin b + x' cos b - i y').
    """
    xp, yp, zp = np.asarray(p, dtype=float)
    s, c = math.sin(state.beta), math.cos(state.beta)
    if state.m == 0:
        return complex(math.sqrt(2.0) * (zp * c - xp * s), 0.0)
    u = zp * s + xp * c
    if state.m == 1:
        return complex(-u, -yp)
    return complex(u, -yp)


def _node_guard(state: RotatedState, u: float, yp: float, consts: PhysConsts) -> float:
    """|phi|^2 = u^2 + y'^2 for m = +-1, with the nodal-set rejection."""
    d = u * u + yp * yp
    r_e = 4.0 * consts.a_mu / consts.Z
    if d < NODE_TOL * r_e**2:
        raise NodeError(f"point lies on the nodal line of the m={state.m} state "
                        f"(|phi|^2 = {d:.3e} m^2)")
    return d


def phase_jet(state: RotatedState, p, consts: PhysConsts) -> PhaseJet:
    """S = hbar arg(phi_21m) and its closed-form first/second derivatives.

    For m=0, S and all derivatives vanish identically.  For m=-1 every
    derivative is the negative of the m=+1 value at the same point.
    """
    xp, yp, zp = np.asarray(p, dtype=float)
    if state.m == 0:
        return PhaseJet(S=0.0, grad=np.zeros(3), hess=np.zeros((3, 3)))
    s, c = math.sin(state.beta), math.cos(state.beta)
    u = zp * s + xp * c  # the unrotated x coordinate
    d = _node_guard(state, u, yp, consts)
    hbar = consts.hbar

    grad = (hbar / d) * np.array([-yp * c, u, -yp * s])
    d2 = d * d
    sxx = 2.0 * hbar * c * c * u * yp / d2
    syy = -2.0 * hbar * u * yp / d2
    szz = 2.0 * hbar * s * s * u * yp / d2
    sxy = -hbar * c * (u * u - yp * yp) / d2
    sxz = 2.0 * hbar * s * c * u * yp / d2
    syz = hbar * s * (yp * yp - u * u) / d2
    hess = np.array([[sxx, sxy, sxz],
                     [sxy, syy, syz],
                     [sxz, syz, szz]])

    if state.m == -1:
        # every derivative of S_{21,-1} is the negative of the S_{211} one
        grad, hess = -grad, -hess
    phi = phi_21m(state, p)
    return PhaseJet(S=hbar * math.atan2(phi.imag, phi.real), grad=grad, hess=hess)


def eom_rhs(state: RotatedState, p, consts: PhysConsts) -> np.ndarray:
    """Guidance-law velocity dr'/dt = grad S_21m / m_e at the primed point p."""
    if state.m == 0:
        return np.zeros(3)
    return phase_jet(state, p, consts).grad / consts.m_e


def net_force_rotated(state: RotatedState, p, consts: PhysConsts) -> np.ndarray:
    """F = (1/m_e) Hess(S) . grad(S): the centripetal force in primed components."""
    if state.m == 0:
        return np.zeros(3)
    jet = phase_jet(state, p, consts)
    return jet.hess @ jet.grad / consts.m_e


def angular_momentum_rotated(state: RotatedState, p, consts: PhysConsts) -> np.ndarray:
    """L = r' x grad S in primed components; zero for m = 0."""
    if state.m == 0:
        return np.zeros(3)
    pvec = np.asarray(p, dtype=float)
    return np.cross(pvec, phase_jet(state, p, consts).grad)


def decompose(state: RotatedState) -> np.ndarray:
    """Coefficients of the lab eigenstate psi_21m over the primed-frame
    eigenstates (psi'_211, psi'_210, psi'_21,-1).

    Rows over m form an orthogonal matrix for every beta.
    """
    s, c = math.sin(state.beta), math.cos(state.beta)
    rt2 = math.sqrt(2.0)
    if state.m == 1:
        return np.array([(1.0 + c) / 2.0, -s / rt2, (1.0 - c) / 2.0])
    if state.m == 0:
        return np.array([s / rt2, c, -s / rt2])
    return np.array([(1.0 - c) / 2.0, s / rt2, (1.0 + c) / 2.0])


def initial_condition(m: int, geom: OrbitGeometry, config: RotationConfig) -> np.ndarray:
    """Primed-frame start point: the unrotated orbit start carried into the
    rotated frame.  With geom phase = pi/2 this is
    (-r_e cos(theta_e) sin(beta), r_e sin(theta_e), r_e cos(theta_e) cos(beta)).
    """
    if m == 0:
        raise StationaryElectronError("m = 0 electron is stationary: no orbit start point")
    if m != geom.qn.m:
        raise ValueError(f"geometry is for m={geom.qn.m}, asked for m={m}")
    return rotate(config, position(geom, 0.0))
