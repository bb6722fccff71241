#!/usr/bin/env python3
"""Print the per-m energy bookkeeping and orbit geometry for one (n, l) shell.

Each row splits the eigenvalue E_n into the circulation term, the remaining
central energy E_CI, the Coulomb term and the quantum potential, and lists
the orbit radius, cone angle and speed.  Stationary states (m = 0) appear
with zero speed and all of E_n minus V carried by Q.
"""
import argparse
import math
import sys

from causal_hydrogen.constants import default_constants
from causal_hydrogen.errors import StationaryElectronError
from causal_hydrogen.kinematics import energy_report, orbit_geometry, speed
from causal_hydrogen.wavefunctions import QuantumNumbers

SCALE = 1e-19  # J per table unit


def shell_rows(n, l, consts):
    rows = []
    for m in range(-l, l + 1):
        qn = QuantumNumbers(n, l, m)
        rep = energy_report(qn, consts)
        try:
            geom = orbit_geometry(qn, consts)
            theta = math.degrees(geom.theta_e)
            r_0, v = geom.r_0, speed(geom)
        except StationaryElectronError:
            theta, r_0, v = 90.0, 0.0, 0.0
        rows.append((m, theta, r_0, v, rep.E_n / SCALE, rep.phi_term / SCALE,
                     rep.E_CI / SCALE, rep.KE_CI / SCALE, rep.V / SCALE,
                     rep.Q / SCALE))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--l", type=int, default=1)
    args = ap.parse_args(argv)

    consts = default_constants()
    r_e = args.n**2 * consts.a_mu / consts.Z
    print(f"shell n={args.n} l={args.l}, r_e = {r_e:.4e} m, energies in 1e-19 J")
    header = (f"{'m':>3} {'theta_e':>8} {'r_0 (m)':>11} {'v (m/s)':>10} "
              f"{'E_n':>8} {'phi':>8} {'E_CI':>8} {'KE_CI':>7} {'V':>8} {'Q':>7}")
    print(header)
    print("-" * len(header))
    for row in shell_rows(args.n, args.l, consts):
        m, theta, r_0, v, e_n, phi, e_ci, ke, v_pot, q = row
        print(f"{m:>3} {theta:8.2f} {r_0:11.4e} {v:10.3e} "
              f"{e_n:8.3f} {phi:8.3f} {e_ci:8.3f} {ke:7.3f} {v_pot:8.3f} {q:7.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
