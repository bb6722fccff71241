"""Physical constants (SI) for the causal hydrogen model.

All other modules take a PhysConsts instance instead of importing globals,
so a perturbed or overridden constant set propagates everywhere.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

# CODATA 2018 SI values.
HBAR = 1.054571817e-34       # J s (exact h / 2 pi)
ELECTRON_MASS = 9.1093837015e-31   # kg
PROTON_MASS = 1.67262192369e-27    # kg
ELEMENTARY_CHARGE = 1.602176634e-19  # C (exact)
VACUUM_PERMITTIVITY = 8.8541878128e-12  # F / m

ENV_CONSTANTS_FILE = "CAUSAL_HYDROGEN_CONSTANTS"

_BASE_FIELDS = ("hbar", "m_e", "M_nucleus", "e_charge", "eps0", "Z")


@dataclass(frozen=True)
class PhysConsts:
    """Fundamental constants plus the derived two-body quantities.

    mu is the reduced mass, a0 the Bohr radius, and a_mu the modified Bohr
    radius (Bohr radius with mu in place of m_e), which sets every length
    scale of the model: the preferred orbit radius is r_e = n^2 a_mu / Z.
    """

    hbar: float      # J s
    m_e: float       # kg
    M_nucleus: float  # kg
    e_charge: float  # C
    eps0: float      # F / m
    Z: int           # atomic number
    mu: float        # kg
    a0: float        # m
    a_mu: float      # m


def make_constants(hbar: float = HBAR,
                   m_e: float = ELECTRON_MASS,
                   M_nucleus: float = PROTON_MASS,
                   e_charge: float = ELEMENTARY_CHARGE,
                   eps0: float = VACUUM_PERMITTIVITY,
                   Z: int = 1) -> PhysConsts:
    """Build a PhysConsts with the derived fields computed from the base ones."""
    if min(hbar, m_e, M_nucleus, e_charge, eps0) <= 0.0:
        raise ValueError("all base constants must be strictly positive")
    if Z < 1 or int(Z) != Z:
        raise ValueError(f"Z must be a positive integer, got {Z!r}")
    mu = m_e * M_nucleus / (m_e + M_nucleus)
    four_pi_eps0 = 4.0 * math.pi * eps0
    a0 = four_pi_eps0 * hbar**2 / (m_e * e_charge**2)
    a_mu = four_pi_eps0 * hbar**2 / (mu * e_charge**2)
    return PhysConsts(hbar=hbar, m_e=m_e, M_nucleus=M_nucleus,
                      e_charge=e_charge, eps0=eps0, Z=int(Z),
                      mu=mu, a0=a0, a_mu=a_mu)


def default_constants() -> PhysConsts:
    """CODATA SI values with Z = 1 and a proton nucleus."""
    return make_constants()


def load_constants(path: str) -> PhysConsts:
    """Read a key=value override file (SI units) on top of the defaults.

    Recognized keys: hbar, m_e, M_nucleus, e_charge, eps0, Z.  Blank lines
    and lines starting with '#' are ignored.  Derived fields are always
    recomputed, never read.
    """
    overrides: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _BASE_FIELDS:
                raise ValueError(f"{path}:{lineno}: unknown constant {key!r}")
            overrides[key] = float(value)
    if "Z" in overrides:
        overrides["Z"] = int(overrides["Z"])
    defaults = {
        "hbar": HBAR, "m_e": ELECTRON_MASS, "M_nucleus": PROTON_MASS,
        "e_charge": ELEMENTARY_CHARGE, "eps0": VACUUM_PERMITTIVITY, "Z": 1,
    }
    defaults.update(overrides)
    return make_constants(**defaults)


def constants_from_env() -> PhysConsts:
    """Defaults, unless the CAUSAL_HYDROGEN_CONSTANTS env var names an override file."""
    path = os.environ.get(ENV_CONSTANTS_FILE)
    if path:
        return load_constants(path)
    return default_constants()
