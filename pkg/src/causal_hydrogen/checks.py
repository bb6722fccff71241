"""Named verification checks over every published value and model invariant.

Each check_* function returns a CheckResult with the worst measured
deviation in its detail string; run_all() executes the whole suite.  The
`causal-hydrogen check` command and the acceptance tests both drive these.
"""
from __future__ import annotations

import inspect
import math
from dataclasses import dataclass

import numpy as np

from . import verify
from .constants import PhysConsts
from .errors import StationaryElectronError
from .kinematics import (angular_momentum, angular_momentum_trajectory,
                         bohr_energy, coulomb_potential, energy_report,
                         field_sample, momentum_field, net_force,
                         orbit_geometry, position, quantum_potential_numeric,
                         speed, velocity)
from .rotation import (RotatedState, RotationConfig, angular_momentum_rotated,
                       decompose, initial_condition, net_force_rotated,
                       phase_jet, phi_21m, rotate, unrotate)
from .runs import rotated_orbit
from .wavefunctions import QuantumNumbers, SphericalPoint, psi

DEFAULT_SEED = 20250825


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _rel(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


def _vec_rel(value: np.ndarray, reference: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(value) - np.asarray(reference))
                 / np.linalg.norm(reference))


def _result(name: str, worst: float, tol: float, extra: str = "") -> CheckResult:
    detail = f"worst deviation {worst:.3e} (tol {tol:.1e}){extra}"
    return CheckResult(name=name, passed=worst <= tol, detail=detail)


# published Table-1 geometry: m -> (r_0, z_0, theta_e degrees)
TABLE_N2 = {1: (1.50e-10, 1.50e-10, 45.0),
            -1: (1.50e-10, -1.50e-10, 135.0)}
TABLE_N2_RE = 2.12e-10
TABLE_N4 = {1: (2.45e-10, 8.11e-10, 16.8),
            2: (4.89e-10, 6.92e-10, 35.3),
            3: (7.34e-10, 4.23e-10, 60.0),
            -1: (2.45e-10, -8.11e-10, 163.0),
            -2: (4.89e-10, -6.92e-10, 145.0),
            -3: (7.34e-10, -4.23e-10, 120.0)}
TABLE_N4_RE = 8.47e-10

# published section-8 energy table, in units of 1e-19 J, 3 printed decimals
ENERGY_TABLE_M1 = {"E_n": -5.447, "phi_term": -5.444, "E_CI": -0.003,
                   "KE_CI": 2.722, "V": -10.894, "Q": 2.725}
ENERGY_TABLE_M0 = {"E_n": -5.447, "phi_term": 0.000, "E_CI": -5.447,
                   "KE_CI": 0.000, "V": -10.894, "Q": 5.447}

SPEED_N2 = 7.73e5
SPEED_N4 = 4.73e5
FORCE_N2 = 3.64e-9
ANGMOM_L1 = 1.49e-34


def _geometry_check(name: str, n: int, l: int, table: dict, r_e_ref: float,
                    consts: PhysConsts) -> CheckResult:
    worst = 0.0
    for m, (r_0, z_0, theta_deg) in table.items():
        geom = orbit_geometry(QuantumNumbers(n, l, m), consts)
        worst = max(worst,
                    _rel(geom.r_0, r_0),
                    _rel(geom.z_0, z_0),
                    _rel(math.degrees(geom.theta_e), theta_deg),
                    _rel(geom.r_e, r_e_ref))
    return _result(name, worst, 5e-3, extra=f" over {len(table)} orbits")


def check_geometry_n2(consts: PhysConsts) -> CheckResult:
    """Orbit geometry for (n=2, l=1, m=+-1) against the published 3-sf table."""
    res = _geometry_check("geometry-n2-l1", 2, 1, TABLE_N2, TABLE_N2_RE, consts)
    # the published m=1 start point (r_0, 0, z_0) is position(t=0) with phase 0
    geom = orbit_geometry(QuantumNumbers(2, 1, 1), consts)
    start_err = _vec_rel(position(geom, 0.0), np.array([1.50e-10, 0.0, 1.50e-10]))
    if start_err > 5e-3 or not res.passed:
        return CheckResult(res.name, False, res.detail + f"; start point err {start_err:.2e}")
    return res


def check_geometry_n4(consts: PhysConsts) -> CheckResult:
    """Orbit geometry for all six (n=4, l=3, m!=0) rows of the published table."""
    return _geometry_check("geometry-n4-l3", 4, 3, TABLE_N4, TABLE_N4_RE, consts)


def check_speeds(consts: PhysConsts) -> CheckResult:
    """Orbital speeds 7.73e5 m/s (2,1,+-1) and 4.73e5 m/s (4,3,m!=0) within 0.5%."""
    worst = 0.0
    for m in (1, -1):
        worst = max(worst, _rel(speed(orbit_geometry(QuantumNumbers(2, 1, m), consts)), SPEED_N2))
    for m in (1, 2, 3, -1, -2, -3):
        worst = max(worst, _rel(speed(orbit_geometry(QuantumNumbers(4, 3, m), consts)), SPEED_N4))
    return _result("orbit-speeds", worst, 5e-3)


def check_net_force_magnitude(consts: PhysConsts) -> CheckResult:
    """|F_net| = 3.64e-9 N on the (2,1,+-1) orbit, unrotated and beta=30 deg, within 1%."""
    worst = 0.0
    beta = math.radians(30.0)
    for m in (1, -1):
        geom = orbit_geometry(QuantumNumbers(2, 1, m), consts)
        for phi in (0.0, 1.1, 3.9):
            p = SphericalPoint(geom.r_e, geom.theta_e, phi)
            worst = max(worst, _rel(float(np.linalg.norm(net_force(geom.qn, p, consts))),
                                    FORCE_N2))
        state = RotatedState(m=m, beta=beta)
        geom_start = orbit_geometry(QuantumNumbers(2, 1, m), consts, phase=math.pi / 2.0)
        start = initial_condition(m, geom_start, RotationConfig(beta))
        worst = max(worst, _rel(float(np.linalg.norm(net_force_rotated(state, start, consts))),
                                FORCE_N2))
    return _result("net-force-magnitude", worst, 1e-2)


def check_angular_momentum_magnitude(consts: PhysConsts) -> CheckResult:
    """|L| = 1.49e-34 (0.5%) rotated and unrotated; L_z = m hbar to 1e-12."""
    worst_mag = 0.0
    worst_lz = 0.0
    beta = math.radians(30.0)
    for m in (1, -1):
        geom = orbit_geometry(QuantumNumbers(2, 1, m), consts)
        p = SphericalPoint(geom.r_e, geom.theta_e, 0.7)
        lvec = angular_momentum(geom.qn, p, consts)
        worst_mag = max(worst_mag, _rel(float(np.linalg.norm(lvec)), ANGMOM_L1))
        worst_lz = max(worst_lz, _rel(float(lvec[2]), m * consts.hbar))
        state = RotatedState(m=m, beta=beta)
        geom_start = orbit_geometry(QuantumNumbers(2, 1, m), consts, phase=math.pi / 2.0)
        start = initial_condition(m, geom_start, RotationConfig(beta))
        lrot = angular_momentum_rotated(state, start, consts)
        worst_mag = max(worst_mag, _rel(float(np.linalg.norm(lrot)), ANGMOM_L1))
    if worst_lz > 1e-12:
        return CheckResult("angular-momentum-magnitude", False,
                           f"L_z deviation {worst_lz:.3e} exceeds 1e-12")
    return _result("angular-momentum-magnitude", worst_mag, 5e-3,
                   extra=f"; L_z rel err {worst_lz:.1e}")


def check_energy_table(consts: PhysConsts) -> CheckResult:
    """Section-8 energy bookkeeping to the printed 3 decimals (x 1e-19 J).

    'Match' means within one unit in the last printed place (the published
    V doubles an already-rounded E_n).
    """
    tol = 0.001 * (1.0 + 1e-9)
    worst = 0.0
    rows = []
    for m, table in ((1, ENERGY_TABLE_M1), (-1, ENERGY_TABLE_M1), (0, ENERGY_TABLE_M0)):
        rep = energy_report(QuantumNumbers(2, 1, m), consts)
        for field_name, printed in table.items():
            value = getattr(rep, field_name) / 1e-19
            err = abs(value - printed)
            worst = max(worst, err)
            if err > tol:
                rows.append(f"m={m} {field_name}: {value:.4f} vs printed {printed:.3f}")
    extra = ("; " + "; ".join(rows)) if rows else ""
    detail = f"worst |computed - printed| {worst:.2e} x 1e-19 J (tol 1 ulp = 0.001){extra}"
    return CheckResult("energy-table", worst <= tol, detail)


def check_oracle_equivalence(consts: PhysConsts, seed: int = DEFAULT_SEED) -> CheckResult:
    """Finite-difference oracles vs closed forms: Q at 20 orbit points (1e-3),
    grad S at 50 random points per frame (1e-6)."""
    rng = np.random.default_rng(seed)
    worst_q = 0.0
    for m in (1, -1):
        qn = QuantumNumbers(2, 1, m)
        geom = orbit_geometry(qn, consts)
        q_alg = energy_report(qn, consts).Q
        for phi in rng.uniform(0.0, 2.0 * math.pi, size=10):
            p = SphericalPoint(geom.r_e, geom.theta_e, float(phi))
            worst_q = max(worst_q, _rel(quantum_potential_numeric(qn, p, consts), q_alg))

    h = 1e-5 * consts.a_mu
    worst_grad = 0.0

    def random_points(count):
        r = rng.uniform(0.5, 3.0, size=count) * 4.0 * consts.a_mu
        theta = rng.uniform(0.35, math.pi - 0.35, size=count)
        phi = rng.uniform(0.0, 2.0 * math.pi, size=count)
        return [SphericalPoint(float(a), float(b), float(c)) for a, b, c in zip(r, theta, phi)]

    for m in (1, -1):
        qn = QuantumNumbers(2, 1, m)

        def amp_lab(x: np.ndarray) -> complex:
            r = float(np.linalg.norm(x))
            p = SphericalPoint(r, math.acos(float(x[2]) / r), math.atan2(float(x[1]), float(x[0])))
            return psi(qn, p, 0.0, consts)

        for p in random_points(25):
            x = p.to_cartesian()
            fd = verify.fd_phase_gradient(amp_lab, x, h, consts.hbar)
            worst_grad = max(worst_grad, _vec_rel(fd, momentum_field(qn, p, consts)))

        state = RotatedState(m=m, beta=math.radians(30.0))
        config = RotationConfig(state.beta)
        for p in random_points(25):
            xp = rotate(config, p.to_cartesian())
            fd = verify.fd_phase_gradient(lambda v: phi_21m(state, v), xp, h, consts.hbar)
            worst_grad = max(worst_grad, _vec_rel(fd, phase_jet(state, xp, consts).grad))

    passed = worst_q <= 1e-3 and worst_grad <= 1e-6
    return CheckResult("oracle-equivalence", passed,
                       f"Q fd-vs-algebra worst {worst_q:.3e} (tol 1e-3); "
                       f"grad S fd worst {worst_grad:.3e} (tol 1e-6)")


def _endpoint_error(m: int, beta: float, consts: PhysConsts, dt_divisor: int) -> float:
    traj = rotated_orbit(m, beta, consts, periods=1.0, dt_divisor=dt_divisor,
                         record_every=dt_divisor)
    return float(np.linalg.norm(traj.y[-1] - traj.y[0]))


def check_dynamics_equivalence(consts: PhysConsts) -> CheckResult:
    """RK4 vs closed form: beta=0 within 1e-6, beta=30 deg inverse-rotated
    within 1e-5, observed convergence order in [3.7, 4.3]."""
    qn = QuantumNumbers(2, 1, 1)
    geom = orbit_geometry(qn, consts, phase=math.pi / 2.0)

    traj0 = rotated_orbit(1, 0.0, consts, periods=1.0, dt_divisor=2048, record_every=8)
    err0 = float(np.max(np.linalg.norm(traj0.y - position(geom, traj0.t), axis=1))) / geom.r_e

    beta = math.radians(30.0)
    traj30 = rotated_orbit(1, beta, consts, periods=1.0, dt_divisor=2048, record_every=8)
    config = RotationConfig(beta)
    unrot = np.array([unrotate(config, y) for y in traj30.y])
    err30 = float(np.max(np.linalg.norm(unrot - position(geom, traj30.t), axis=1))) / geom.r_e

    errors = [_endpoint_error(1, beta, consts, div) for div in (256, 512, 1024)]
    order = verify.convergence_order(np.array(errors))

    passed = err0 <= 1e-6 and err30 <= 1e-5 and 3.7 <= order <= 4.3
    return CheckResult("dynamics-equivalence", passed,
                       f"beta=0 rel err {err0:.3e} (tol 1e-6); beta=30 rel err "
                       f"{err30:.3e} (tol 1e-5); RK4 order {order:.3f} (in [3.7, 4.3])")


def check_vector_model_properties(consts: PhysConsts, seed: int = DEFAULT_SEED) -> CheckResult:
    """All (l <= 4, 0 < |m| <= l) states: |L|, L_z, |r(t)|, z(t) and the
    centripetal identity to 1e-12; m = 0 states fully at rest with Q = E_n - V."""
    rng = np.random.default_rng(seed)
    tol = 1e-12
    worst = 0.0
    for l in range(1, 5):
        n = l + 1
        for m in [mm for mm in range(-l, l + 1) if mm != 0]:
            qn = QuantumNumbers(n, l, m)
            geom = orbit_geometry(qn, consts)
            l_ref = math.sqrt(l * (l + 1)) * consts.hbar
            for phi in rng.uniform(0.0, 2.0 * math.pi, size=3):
                p = SphericalPoint(geom.r_e, geom.theta_e, float(phi))
                lvec = angular_momentum(qn, p, consts)
                worst = max(worst, _rel(float(np.linalg.norm(lvec)), l_ref),
                            _rel(float(lvec[2]), m * consts.hbar))
                f_mag = float(np.linalg.norm(net_force(qn, p, consts)))
                worst = max(worst, _rel(f_mag, consts.m_e * speed(geom) ** 2 / geom.r_0))
            ts = np.linspace(0.0, 3.0 * geom.period, 64)
            pos = position(geom, ts)
            worst = max(worst,
                        float(np.max(np.abs(np.linalg.norm(pos, axis=1) - geom.r_e))) / geom.r_e,
                        float(np.max(np.abs(pos[:, 2] - geom.z_0))) / geom.r_e)
            # classical consistency L(t) = r(t) x m_e v(t)
            lcross = np.cross(pos, consts.m_e * velocity(geom, ts))
            ltraj = angular_momentum_trajectory(geom, ts, consts)
            worst = max(worst, float(np.max(np.linalg.norm(lcross - ltraj, axis=1))) / l_ref)
    zero_fail = ""
    for l in range(0, 5):
        qn = QuantumNumbers(l + 1, l, 0)
        try:
            orbit_geometry(qn, consts)
            zero_fail = f"; orbit_geometry(m=0, l={l}) did not raise"
        except StationaryElectronError:
            pass
        for r_frac in (0.5, 1.0, 2.3):
            p = SphericalPoint(r_frac * qn.n**2 * consts.a_mu, 1.1, 0.3)
            sample = field_sample(qn, p, consts)
            if (np.any(sample.gradS != 0.0) or np.any(sample.L != 0.0)
                    or np.any(sample.F_net != 0.0)):
                zero_fail += f"; m=0 fields not all zero at l={l}"
                break
            q_expected = bohr_energy(qn.n, consts) - coulomb_potential(p.r, consts)
            worst = max(worst, _rel(sample.Q, q_expected))
    passed = worst <= tol and not zero_fail
    return CheckResult("vector-model-properties", passed,
                       f"worst rel deviation {worst:.3e} (tol 1e-12){zero_fail}")


def check_normalization(consts: PhysConsts) -> CheckResult:
    """Norm of psi within 1e-6 for the (2,1,m) and (4,3,m) families; radial-
    distribution argmax at n^2 a_mu."""
    worst_norm = 0.0
    worst_peak = 0.0
    for n, l in ((2, 1), (4, 3)):
        for m in range(-l, l + 1):
            qn = QuantumNumbers(n, l, m)
            worst_norm = max(worst_norm, abs(verify.normalization(qn, consts) - 1.0))
        peak = verify.radial_mode(QuantumNumbers(n, l, 0), consts)
        worst_peak = max(worst_peak, _rel(peak, n**2 * consts.a_mu / consts.Z))
    passed = worst_norm <= 1e-6 and worst_peak <= 1e-6
    return CheckResult("wavefunction-normalization", passed,
                       f"worst |norm - 1| {worst_norm:.3e} (tol 1e-6); "
                       f"argmax rel err {worst_peak:.3e}")


def check_rotation_invariants(consts: PhysConsts, seed: int = DEFAULT_SEED) -> CheckResult:
    """Rotation layer self-consistency: roundtrip/isometry, orthogonal
    decomposition plus completeness, |phi|^2 identity, Hessian symmetry,
    harmonicity, and scalar frame-invariance along the rotated orbit."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    notes = []
    for _ in range(8):
        beta = float(rng.uniform(0.0, 2.0 * math.pi))
        config = RotationConfig(beta)
        v = rng.normal(size=3) * consts.a_mu * 4.0
        worst = max(worst, float(np.linalg.norm(unrotate(config, rotate(config, v)) - v))
                    / float(np.linalg.norm(v)))
        worst = max(worst, abs(float(np.linalg.norm(rotate(config, v)))
                               - float(np.linalg.norm(v))) / float(np.linalg.norm(v)))
        mat = np.array([decompose(RotatedState(m=m, beta=beta)) for m in (1, 0, -1)])
        worst = max(worst, float(np.max(np.abs(mat @ mat.T - np.eye(3)))))
        # completeness: lab eigenstate = sum of coefficients times primed eigenstates
        lab = rng.normal(size=3) * consts.a_mu * 4.0
        primed = rotate(config, lab)
        for m in (1, 0, -1):
            lhs = phi_21m(RotatedState(m=m, beta=0.0), lab)
            coeffs = decompose(RotatedState(m=m, beta=beta))
            rhs = sum(coeff * phi_21m(RotatedState(m=k, beta=0.0), primed)
                      for coeff, k in zip(coeffs, (1, 0, -1)))
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 0.1 * consts.a_mu))

    beta = math.radians(30.0)
    state = RotatedState(m=1, beta=beta)
    config = RotationConfig(beta)
    for _ in range(8):
        xp = rng.normal(size=3) * consts.a_mu * 4.0
        s, c = math.sin(beta), math.cos(beta)
        d_closed = (xp[2]**2 * s**2 + xp[0]**2 * c**2 + xp[1]**2
                    + 2.0 * xp[0] * xp[2] * s * c)
        phi_p = phi_21m(state, xp)
        phi_m = phi_21m(RotatedState(m=-1, beta=beta), xp)
        worst = max(worst, _rel(abs(phi_p) ** 2, d_closed),
                    _rel(abs(phi_p) ** 2, abs(phi_m) ** 2))
        jet = phase_jet(state, xp, consts)
        worst = max(worst, float(np.max(np.abs(jet.hess - jet.hess.T)))
                    / float(np.max(np.abs(jet.hess))))
        worst = max(worst, abs(float(np.trace(jet.hess))) / float(np.max(np.abs(jet.hess))))
        fd_hess = verify.fd_jacobian(lambda v: phase_jet(state, v, consts).grad,
                                     xp, 1e-5 * consts.a_mu)
        if _vec_rel(fd_hess.ravel(), jet.hess.ravel()) > 1e-4:
            notes.append("Hessian finite-difference mismatch")

    geom = orbit_geometry(QuantumNumbers(2, 1, 1), consts, phase=math.pi / 2.0)
    traj = rotated_orbit(1, beta, consts, periods=1.0, dt_divisor=2048, record_every=32)
    radii = np.linalg.norm(traj.y, axis=1)
    speeds = np.linalg.norm(traj.observed["velocity"], axis=1)
    lmags = np.linalg.norm(traj.observed["L"], axis=1)
    fmags = np.linalg.norm(traj.observed["F_net"], axis=1)
    v_ref = speed(geom)
    l_ref = math.sqrt(2.0) * consts.hbar
    f_ref = consts.m_e * v_ref**2 / geom.r_0
    drift = max(float(np.max(np.abs(radii - geom.r_e))) / geom.r_e,
                float(np.max(np.abs(speeds - v_ref))) / v_ref,
                float(np.max(np.abs(lmags - l_ref))) / l_ref,
                float(np.max(np.abs(fmags - f_ref))) / f_ref)
    passed = worst <= 1e-12 and drift <= 1e-6 and not notes
    detail = (f"algebraic worst {worst:.3e} (tol 1e-12); on-orbit scalar drift "
              f"{drift:.3e} (tol 1e-6)")
    if notes:
        detail += "; " + "; ".join(notes)
    return CheckResult("rotation-invariants", passed, detail)


def check_orbit_invariants(consts: PhysConsts) -> CheckResult:
    """Unrotated trajectory invariants: force direction, orbit sense, energy
    closure, and the S-gradient fd identity are exercised elsewhere; here the
    force geometry and sense."""
    worst = 0.0
    notes = []
    for n, l, m in ((2, 1, 1), (2, 1, -1), (4, 3, 2), (4, 3, -3)):
        qn = QuantumNumbers(n, l, m)
        geom = orbit_geometry(qn, consts)
        ts = np.linspace(0.0, geom.period, 17)
        pos = position(geom, ts)
        angles = np.unwrap(np.arctan2(pos[:, 1], pos[:, 0]))
        dphi = np.diff(angles)
        if m > 0 and not np.all(dphi > 0):
            notes.append(f"m={m} angle not increasing")
        if m < 0 and not np.all(dphi < 0):
            notes.append(f"m={m} angle not decreasing")
        for phi in (0.0, 2.2):
            p = SphericalPoint(geom.r_e, geom.theta_e, phi)
            f = net_force(qn, p, consts)
            if f[2] != 0.0:
                notes.append("F_net z-component nonzero")
            xy = np.array([math.cos(phi), math.sin(phi), 0.0])
            cosang = float(f @ xy) / float(np.linalg.norm(f))
            worst = max(worst, abs(cosang + 1.0))
        rep = energy_report(qn, consts)
        worst = max(worst, abs(rep.E_n - rep.KE_CI - rep.V - rep.Q) / abs(rep.E_n))
    passed = worst <= 1e-12 and not notes
    detail = f"worst deviation {worst:.3e} (tol 1e-12)"
    if notes:
        detail += "; " + "; ".join(notes)
    return CheckResult("orbit-invariants", passed, detail)


ACCEPTANCE_CHECKS = (
    check_geometry_n2,
    check_geometry_n4,
    check_speeds,
    check_net_force_magnitude,
    check_angular_momentum_magnitude,
    check_energy_table,
    check_oracle_equivalence,
    check_dynamics_equivalence,
    check_vector_model_properties,
    check_normalization,
)

INVARIANT_CHECKS = (
    check_rotation_invariants,
    check_orbit_invariants,
)


def run_all(consts: PhysConsts, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """Run the acceptance table plus the invariant suite."""
    results = []
    for fn in ACCEPTANCE_CHECKS + INVARIANT_CHECKS:
        if "seed" in inspect.signature(fn).parameters:
            results.append(fn(consts, seed=seed))
        else:
            results.append(fn(consts))
    return results
