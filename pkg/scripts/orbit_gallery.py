#!/usr/bin/env python3
"""Dump a small gallery of orbit CSV files for plotting.

Writes one trajectory file per state: the analytic circles of the n=2 and
n=4 shells plus RK4 orbits of the rotated (2,1,+1) state at a few tilt
angles.  Columns match the CLI trajectory format, so any of these can be
reproduced with `causal-hydrogen orbit` / `rotated-orbit`.
"""
import argparse
import math
import pathlib
import sys

from causal_hydrogen.cli import TRAJECTORY_COLUMNS, _trajectory_rows, write_table
from causal_hydrogen.constants import default_constants
from causal_hydrogen.kinematics import orbit_geometry
from causal_hydrogen.runs import analytic_orbit, rotated_orbit
from causal_hydrogen.wavefunctions import QuantumNumbers

STATES = [(2, 1, 1), (2, 1, -1), (4, 3, 1), (4, 3, 2), (4, 3, 3)]
TILTS_DEG = [0.0, 30.0, 60.0]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="gallery", help="output directory")
    ap.add_argument("--samples", type=int, default=256,
                    help="samples per analytic orbit")
    args = ap.parse_args(argv)

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    consts = default_constants()

    for n, l, m in STATES:
        geom = orbit_geometry(QuantumNumbers(n, l, m), consts)
        traj = analytic_orbit(geom, consts, samples_per_period=args.samples)
        path = outdir / f"orbit_n{n}_l{l}_m{m:+d}.csv"
        with path.open("w", encoding="utf-8") as fh:
            write_table(fh, traj.meta, TRAJECTORY_COLUMNS, _trajectory_rows(traj), "csv")
        print(f"{path}  r_0={geom.r_0:.3e} m  T={geom.period:.3e} s")

    for beta_deg in TILTS_DEG:
        traj = rotated_orbit(1, math.radians(beta_deg), consts)
        path = outdir / f"rotated_m+1_beta{int(beta_deg):02d}.csv"
        with path.open("w", encoding="utf-8") as fh:
            write_table(fh, traj.meta, TRAJECTORY_COLUMNS, _trajectory_rows(traj), "csv")
        print(f"{path}  closure={traj.meta['closure_error_rel']:.2e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
