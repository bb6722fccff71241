#!/usr/bin/env python3
"""RK4 convergence of the rotated-orbit integration against the exact circle.

For each step count the script integrates one period of the rotated
(2,1,+1) orbit, rotates the endpoint back to the lab frame and measures the
distance to the analytic position.  Successive error ratios should approach
2^4 = 16; the fitted order is printed at the end.

Also reports the finite-difference phase-gradient error versus step size h,
which should shrink like h^2 until roundoff takes over near h ~ 1e-6 a_mu.
"""
import argparse
import math
import sys

import numpy as np

from causal_hydrogen.constants import default_constants
from causal_hydrogen.kinematics import momentum_field, orbit_geometry, position
from causal_hydrogen.rotation import RotationConfig, unrotate
from causal_hydrogen.runs import rotated_orbit
from causal_hydrogen.verify import convergence_order, fd_phase_gradient
from causal_hydrogen.wavefunctions import QuantumNumbers, SphericalPoint, psi


def endpoint_errors(beta, divisors, consts):
    qn = QuantumNumbers(2, 1, 1)
    geom = orbit_geometry(qn, consts, phase=math.pi / 2.0)
    config = RotationConfig(beta)
    errors = []
    for divisor in divisors:
        traj = rotated_orbit(1, beta, consts, dt_divisor=divisor,
                             record_every=divisor)
        lab_end = unrotate(config, traj.y[-1])
        exact = position(geom, traj.t[-1])
        errors.append(float(np.linalg.norm(lab_end - exact)) / geom.r_e)
    return errors


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--beta-deg", type=float, default=30.0)
    ap.add_argument("--divisors", type=int, nargs="+",
                    default=[64, 128, 256, 512, 1024])
    args = ap.parse_args(argv)

    consts = default_constants()
    beta = math.radians(args.beta_deg)

    print(f"RK4 endpoint error after one period, beta = {args.beta_deg:.1f} deg")
    print(f"{'steps':>6} {'rel error':>12} {'ratio':>8}")
    errs = endpoint_errors(beta, args.divisors, consts)
    for i, (divisor, err) in enumerate(zip(args.divisors, errs)):
        ratio = errs[i - 1] / err if i else float("nan")
        print(f"{divisor:>6} {err:12.3e} {ratio:8.2f}")
    print(f"fitted order: {convergence_order(errs):.3f}")

    qn = QuantumNumbers(2, 1, 1)
    p = SphericalPoint(5.2 * consts.a_mu, 1.1, 0.7)
    exact = momentum_field(qn, p, consts)

    def amp(x):
        r = float(np.linalg.norm(x))
        q = SphericalPoint(r, math.acos(float(x[2]) / r),
                           math.atan2(float(x[1]), float(x[0])))
        return psi(qn, q, 0.0, consts)

    print("\nfd phase gradient error vs step (at an off-orbit point)")
    print(f"{'h / a_mu':>10} {'rel error':>12}")
    for h_frac in (1e-2, 1e-3, 1e-4, 1e-5, 1e-6):
        grad = fd_phase_gradient(amp, p.to_cartesian(), h_frac * consts.a_mu,
                                 consts.hbar)
        rel = float(np.linalg.norm(grad - exact) / np.linalg.norm(exact))
        print(f"{h_frac:>10.0e} {rel:12.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
