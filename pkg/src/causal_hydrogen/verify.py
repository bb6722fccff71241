"""Independent numeric oracles: quadrature normalization, finite-difference
gradients of phases, distribution-mode search, and convergence-order fits.

Everything here deliberately avoids the closed forms it is used to verify:
gradients come from central differences of complex arguments, norms from
Gauss-Legendre x trapezoid x adaptive quadrature, and the radial mode from
a golden-section search.
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np
from scipy import integrate, optimize

from .constants import PhysConsts
from .wavefunctions import QuantumNumbers, assoc_legendre, radial, radial_distribution, sph_norm

# Radial quadrature cutoff: rho = 2 Z r / (n a_mu) reaches 50, where the
# integrand tail is < 1e-15 for every bound state of interest.
RADIAL_CUTOFF_NA_MU = 25.0

_trapezoid = getattr(np, "trapezoid", None) or np.trapz  # numpy < 2 fallback


def fd_phase_gradient(amp: Callable[[np.ndarray], complex], x: np.ndarray,
                      h: float, hbar: float) -> np.ndarray:
    """Central-difference gradient of S = hbar arg(amp) at x.

    Differences of arg are taken as arg(amp(x+h) conj(amp(x-h))), which is
    branch-cut safe whenever the true phase step stays below pi.
    """
    x = np.asarray(x, dtype=float)
    grad = np.empty(3)
    for i in range(3):
        step = np.zeros(3)
        step[i] = h
        ratio = amp(x + step) * np.conj(amp(x - step))
        grad[i] = hbar * np.angle(ratio) / (2.0 * h)
    return grad


def fd_jacobian(vec: Callable[[np.ndarray], np.ndarray], x: np.ndarray,
                h: float) -> np.ndarray:
    """Central-difference Jacobian of a 3-vector field (rows d vec / d x_j)."""
    x = np.asarray(x, dtype=float)
    cols = []
    for i in range(3):
        step = np.zeros(3)
        step[i] = h
        cols.append((np.asarray(vec(x + step)) - np.asarray(vec(x - step))) / (2.0 * h))
    return np.stack(cols, axis=-1)


def angular_norm(qn: QuantumNumbers, n_gauss: int = 64, n_phi: int = 64) -> float:
    """integral over solid angle of |N_sp P_l^m(cos theta) e^{i m phi}|^2.

    Gauss-Legendre in cos(theta), trapezoid in phi; equals 1 for a correctly
    normalized spherical-harmonic pair.
    """
    nodes, weights = np.polynomial.legendre.leggauss(n_gauss)
    pl = sph_norm(qn.l, qn.m) * assoc_legendre(qn.l, qn.m, nodes)
    theta_part = float(np.sum(weights * pl**2))
    phi_grid = np.linspace(0.0, 2.0 * math.pi, n_phi + 1)
    phi_part = float(_trapezoid(np.abs(np.exp(1j * qn.m * phi_grid)) ** 2, phi_grid))
    return theta_part * phi_part


def radial_norm(qn: QuantumNumbers, consts: PhysConsts) -> float:
    """integral of r^2 R_nl(r)^2 dr by adaptive quadrature; 1 if R is normalized."""
    r_max = RADIAL_CUTOFF_NA_MU * qn.n * consts.a_mu
    val, _ = integrate.quad(lambda r: radial_distribution(qn, r, consts),
                            0.0, r_max, limit=200)
    return val


def normalization(qn: QuantumNumbers, consts: PhysConsts) -> float:
    """integral of |psi_nlm|^2 dV as the product quadrature angular x radial."""
    return angular_norm(qn) * radial_norm(qn, consts)


def radial_mode(qn: QuantumNumbers, consts: PhysConsts) -> float:
    """argmax over r of D_nl(r) = r^2 R_nl^2 by golden-section search."""
    r_bohr = qn.n**2 * consts.a_mu / consts.Z
    res = optimize.minimize_scalar(
        lambda r: -radial_distribution(qn, r, consts),
        bracket=(0.4 * r_bohr, 0.9 * r_bohr, 2.5 * r_bohr),
        method="golden", options={"xtol": 1e-12})
    return float(res.x)


def convergence_order(errors: np.ndarray, refinement: float = 2.0) -> float:
    """Mean observed order from successive errors under step refinement."""
    errors = np.asarray(errors, dtype=float)
    orders = np.log(errors[:-1] / errors[1:]) / math.log(refinement)
    return float(np.mean(orders))
