"""Causal trajectories and field structure of the hydrogen atom.

In the causal reading of quantum mechanics the electron of an eigenstate
psi_nlm moves on a definite path: uniform circular motion at radius
r_e sin(theta_e) about the z-axis for m != 0, and rest for m = 0.  This
package provides the closed-form orbits, the field layer (phase gradient,
quantum potential, net force, angular momentum), rotated-state dynamics by
RK4 integration, and a verification suite over all of it.
"""
from .constants import (PhysConsts, constants_from_env, default_constants,
                        load_constants, make_constants)
from .errors import (CausalModelError, NodeError, QuantumNumberError,
                     SingularityError, StationaryElectronError)
from .integrator import IntegratorConfig, Trajectory, integrate, rk4_step
from .kinematics import (EnergyReport, FieldSample, OrbitGeometry,
                         angular_momentum, angular_momentum_trajectory,
                         bohr_energy, bohr_kinetic, coulomb_potential,
                         energy_report, field_sample, l_squared,
                         momentum_field, net_force, orbit_geometry, phase_s,
                         position, quantum_potential_numeric, speed, velocity)
from .rotation import (PhaseJet, RotatedState, RotationConfig,
                       angular_momentum_rotated, decompose, eom_rhs,
                       initial_condition, net_force_rotated, phase_jet,
                       phi_21m, rotate, unrotate)
from .runs import analytic_orbit, rotated_orbit, stationary_sample
from .wavefunctions import (QuantumNumbers, SphericalPoint, assoc_legendre,
                            psi, radial, radial_distribution, sph_norm)

__version__ = "0.1.0"

__all__ = [
    "PhysConsts", "constants_from_env", "default_constants", "load_constants",
    "make_constants",
    "CausalModelError", "NodeError", "QuantumNumberError", "SingularityError",
    "StationaryElectronError",
    "IntegratorConfig", "Trajectory", "integrate", "rk4_step",
    "EnergyReport", "FieldSample", "OrbitGeometry",
    "angular_momentum", "angular_momentum_trajectory", "bohr_energy",
    "bohr_kinetic", "coulomb_potential", "energy_report", "field_sample",
    "l_squared", "momentum_field", "net_force", "orbit_geometry", "phase_s",
    "position", "quantum_potential_numeric", "speed", "velocity",
    "PhaseJet", "RotatedState", "RotationConfig", "angular_momentum_rotated",
    "decompose", "eom_rhs", "initial_condition", "net_force_rotated",
    "phase_jet", "phi_21m", "rotate", "unrotate",
    "analytic_orbit", "rotated_orbit", "stationary_sample",
    "QuantumNumbers", "SphericalPoint", "assoc_legendre", "psi", "radial",
    "radial_distribution", "sph_norm",
    "__version__",
]
