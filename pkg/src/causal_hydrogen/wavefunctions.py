"""Hydrogenic eigenstates psi_nlm = N_sp R_nl(r) P_l^m(cos theta) e^{i m phi} e^{-i E_n t / hbar}.

Radial functions are built from the normalized associated Laguerre
recurrence and the associated Legendre functions from the standard upward
recurrence with the Condon-Shortley phase, so every bound state n <= any
practical n evaluates without tabulated special cases.  Scalar or ndarray
arguments are accepted for r and cos(theta).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import PhysConsts
from .errors import QuantumNumberError


@dataclass(frozen=True)
class QuantumNumbers:
    """State label (n, l, m) with the usual bound-state constraints."""

    n: int
    l: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise QuantumNumberError(f"n must be >= 1, got n={self.n}")
        if not 0 <= self.l <= self.n - 1:
            raise QuantumNumberError(f"l must satisfy 0 <= l <= n-1, got (n={self.n}, l={self.l})")
        if abs(self.m) > self.l:
            raise QuantumNumberError(f"m must satisfy |m| <= l, got (l={self.l}, m={self.m})")


@dataclass(frozen=True)
class SphericalPoint:
    """Spatial point (r, theta, phi): radius in m, polar angle in [0, pi], azimuth in rad."""

    r: float
    theta: float
    phi: float

    def __post_init__(self) -> None:
        if self.r < 0.0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")

    def to_cartesian(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([self.r * st * math.cos(self.phi),
                         self.r * st * math.sin(self.phi),
                         self.r * math.cos(self.theta)])


def assoc_legendre(l: int, m: int, x):
    """Associated Legendre function P_l^m(x) with the Condon-Shortley phase.

    Upward recurrence in l from the diagonal seed
    P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}; negative m via the
    ratio-of-factorials relation.  x may be a scalar or ndarray in [-1, 1].
    """
    if abs(m) > l:
        raise QuantumNumberError(f"|m| <= l required, got (l={l}, m={m})")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + 1e-12):
        raise ValueError("x must lie in [-1, 1]")
    if m < 0:
        scale = (-1.0) ** (-m) * math.factorial(l + m) / math.factorial(l - m)
        return scale * assoc_legendre(l, -m, x)

    # seed P_m^m, then climb P_{m+1}^m, ..., P_l^m
    somx2 = np.sqrt(np.maximum(0.0, (1.0 - x) * (1.0 + x)))
    pmm = np.full_like(x, (-1.0) ** m * _double_factorial(2 * m - 1)) * somx2 ** m
    if l == m:
        return pmm[()]
    pmmp1 = x * (2 * m + 1) * pmm
    for ll in range(m + 2, l + 1):
        pmm, pmmp1 = pmmp1, (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m)
    return pmmp1[()]


def _double_factorial(k: int) -> float:
    out = 1.0
    while k > 1:
        out *= k
        k -= 2
    return out


def sph_norm(l: int, m: int) -> float:
    """Spherical-harmonic normalization N_sp = sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!)."""
    if abs(m) > l:
        raise QuantumNumberError(f"|m| <= l required, got (l={l}, m={m})")
    return math.sqrt((2 * l + 1) / (4.0 * math.pi)
                     * math.factorial(l - m) / math.factorial(l + m))


def _laguerre(k: int, alpha: int, x):
    """Generalized Laguerre polynomial L_k^(alpha)(x) by the three-term recurrence."""
    lkm1 = np.ones_like(x)
    if k == 0:
        return lkm1
    lk = 1.0 + alpha - x
    for j in range(1, k):
        lkm1, lk = lk, ((2 * j + 1 + alpha - x) * lk - (j + alpha) * lkm1) / (j + 1)
    return lk


def radial(qn: QuantumNumbers, r, consts: PhysConsts):
    """Normalized radial function R_nl(r) in m^(-3/2); r scalar or ndarray in m."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0):
        raise ValueError("r must be >= 0")
    n, l = qn.n, qn.l
    rho = 2.0 * consts.Z * r / (n * consts.a_mu)
    norm = math.sqrt((2.0 * consts.Z / (n * consts.a_mu)) ** 3
                     * math.factorial(n - l - 1)
                     / (2.0 * n * math.factorial(n + l)))
    out = norm * np.exp(-rho / 2.0) * rho ** l * _laguerre(n - l - 1, 2 * l + 1, rho)
    return out[()]


def radial_distribution(qn: QuantumNumbers, r, consts: PhysConsts):
    """Radial distribution D_nl(r) = r^2 R_nl(r)^2 in 1/m; peaks at n^2 a_mu / Z for l = n-1."""
    r = np.asarray(r, dtype=float)
    return (r**2 * radial(qn, r, consts) ** 2)[()]


def bohr_energy(n: int, consts: PhysConsts) -> float:
    """Total energy E_n = -(mu / 2 hbar^2) (Z e^2 / 4 pi eps0)^2 / n^2 in J."""
    if n < 1:
        raise QuantumNumberError(f"n must be >= 1, got {n}")
    coul = consts.Z * consts.e_charge**2 / (4.0 * math.pi * consts.eps0)
    return -consts.mu * coul**2 / (2.0 * consts.hbar**2 * n**2)


def psi(qn: QuantumNumbers, p: SphericalPoint, t: float, consts: PhysConsts) -> complex:
    """Eigenstate amplitude at (p, t); |psi| is time-independent."""
    amp = (sph_norm(qn.l, qn.m)
           * radial(qn, p.r, consts)
           * assoc_legendre(qn.l, qn.m, math.cos(p.theta)))
    phase = qn.m * p.phi - bohr_energy(qn.n, consts) * t / consts.hbar
    return complex(amp * math.cos(phase), amp * math.sin(phase))
