"""Command-line front end.

Subcommands: orbit, rotated-orbit, fields, report, check.  All quantities
cross the CLI boundary in SI with angles in degrees; everything internal is
radians.  Trajectory files share one fixed column set so they are directly
plottable; `--format json` mirrors the CSV with a meta object.

Exit codes: 0 success, 1 failed checks, 2 usage error, 3 nodal-point abort.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import math
import sys
from dataclasses import asdict, dataclass

import numpy as np

from .checks import DEFAULT_SEED, run_all
from .constants import PhysConsts, constants_from_env, make_constants
from .errors import CausalModelError, NodeError
from .kinematics import energy_report, field_sample, orbit_geometry
from .rotation import RotationConfig, rotate
from .runs import analytic_orbit, field_grid_points, rotated_orbit, stationary_sample
from .wavefunctions import QuantumNumbers

TRAJECTORY_COLUMNS = ["t_s", "x_m", "y_m", "z_m", "vx", "vy", "vz",
                      "Lx", "Ly", "Lz", "Fx", "Fy", "Fz"]
FIELD_COLUMNS = ["r_m", "theta_deg", "phi_deg", "S", "gradS_mag", "KE",
                 "Q", "V", "Fx", "Fy", "Fz", "Lx", "Ly", "Lz", "node"]


@dataclass(frozen=True)
class RunSpec:
    """One fully resolved command invocation (the file-determining state)."""
    command: str
    n: int = 2
    l: int = 1
    m: int = 1
    beta: float = 0.0          # rad
    phase: float = 0.0         # rad
    r_e: float | None = None   # m
    periods: float = 1.0
    dt_divisor: int = 2048
    record_every: int = 8
    samples_per_period: int = 256
    grid: str | None = None
    fmt: str = "csv"
    out: str | None = None
    seed: int = DEFAULT_SEED
    perturb_hbar: float = 1.0


def _fmt_float(x: float) -> str:
    return "%.17g" % x


def _meta_value(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (np.floating, float)):
        return float(v)
    if isinstance(v, (np.integer, int)):
        return int(v)
    return v


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def write_table(stream, meta: dict, columns: list[str], rows, fmt: str) -> None:
    """Emit a data table as '#'-annotated CSV or as a meta/columns/rows JSON."""
    rows = [[_meta_value(v) for v in row] for row in rows]
    meta = {k: _meta_value(v) for k, v in meta.items()}
    if fmt == "json":
        clean = [[None if isinstance(v, float) and math.isnan(v) else v for v in row]
                 for row in rows]
        json.dump({"meta": meta, "columns": columns, "rows": clean}, stream, indent=1)
        stream.write("\n")
        return
    for key, value in meta.items():
        text = _fmt_float(value) if isinstance(value, float) else str(value)
        stream.write(f"# {key} = {text}\n")
    stream.write(",".join(columns) + "\n")
    for row in rows:
        stream.write(",".join(_fmt_float(v) if isinstance(v, float) else str(v)
                              for v in row) + "\n")


def _trajectory_rows(traj) -> list[list[float]]:
    blocks = np.hstack([traj.t[:, None], traj.y, traj.observed["velocity"],
                        traj.observed["L"], traj.observed["F_net"]])
    return blocks.tolist()


def _axis_values(text: str) -> np.ndarray:
    """Parse one grid axis: 'a,b,c' literal values or 'lo:hi:count' linspace."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range axis must be lo:hi:count, got {text!r}")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise ValueError(f"axis count must be >= 1, got {count}")
        return np.linspace(lo, hi, count)
    return np.array([float(tok) for tok in text.split(",") if tok.strip()])


def parse_grid(text: str) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Parse 'r=...;theta=...;phi=...' (r in m, angles in degrees)."""
    axes: dict[str, np.ndarray] = {}
    for segment in text.split(";"):
        segment = segment.strip()
        if not segment:
            continue
        if "=" not in segment:
            raise ValueError(f"grid segment must be name=values, got {segment!r}")
        name, values = segment.split("=", 1)
        name = name.strip()
        if name not in ("r", "theta", "phi"):
            raise ValueError(f"unknown grid axis {name!r} (use r, theta, phi)")
        axes[name] = _axis_values(values.strip())
    missing = [name for name in ("r", "theta", "phi") if name not in axes]
    if missing:
        raise ValueError(f"grid is missing axes: {', '.join(missing)}")
    return axes["r"], axes["theta"], axes["phi"]


def _default_grid(qn: QuantumNumbers, consts: PhysConsts):
    """Orbit ring for m != 0; a short radial scan on the equator for m = 0."""
    if qn.m != 0 and qn.l != 0:
        geom = orbit_geometry(qn, consts)
        return (np.array([geom.r_e]), np.array([math.degrees(geom.theta_e)]),
                np.linspace(0.0, 360.0, 16, endpoint=False))
    r_b = qn.n**2 * consts.a_mu / consts.Z
    return (np.array([0.5, 1.0, 1.5, 2.0]) * r_b, np.array([90.0]), np.array([0.0]))


def cmd_orbit(spec: RunSpec, consts: PhysConsts) -> int:
    """Analytic orbit samples (single stationary sample when m = 0 or l = 0)."""
    qn = QuantumNumbers(spec.n, spec.l, spec.m)
    if qn.m == 0 or qn.l == 0:
        point = None if spec.r_e is None else np.array([0.0, 0.0, spec.r_e])
        traj = stationary_sample(qn, consts, point=point)
    else:
        geom = orbit_geometry(qn, consts, r_e=spec.r_e, phase=spec.phase)
        traj = analytic_orbit(geom, consts, periods=spec.periods,
                              samples_per_period=spec.samples_per_period)
    with _open_out(spec.out) as stream:
        write_table(stream, traj.meta, TRAJECTORY_COLUMNS, _trajectory_rows(traj), spec.fmt)
    return 0


def cmd_rotated_orbit(spec: RunSpec, consts: PhysConsts) -> int:
    """RK4 orbit of the rotated (2,1,m) state from the matched start point."""
    if spec.m == 0:
        qn = QuantumNumbers(2, 1, 0)
        traj = stationary_sample(qn, consts)
        point = rotate(RotationConfig(spec.beta), traj.y[0])
        traj.y[0] = point
        traj.meta["beta_deg"] = math.degrees(spec.beta)
        traj.meta["kind"] = "rotated-orbit"
    else:
        traj = rotated_orbit(spec.m, spec.beta, consts, periods=spec.periods,
                             dt_divisor=spec.dt_divisor,
                             record_every=spec.record_every,
                             r_e=spec.r_e, phase=spec.phase)
    with _open_out(spec.out) as stream:
        write_table(stream, traj.meta, TRAJECTORY_COLUMNS, _trajectory_rows(traj), spec.fmt)
    return 0


def cmd_fields(spec: RunSpec, consts: PhysConsts) -> int:
    """Field layer (S, grad S, Q, V, F, L) on a spherical grid.

    Rows on the nodal set are flagged node=1 with NaN field values rather
    than aborting the sweep.
    """
    qn = QuantumNumbers(spec.n, spec.l, spec.m)
    if spec.grid is None:
        r_vals, theta_deg, phi_deg = _default_grid(qn, consts)
    else:
        r_vals, theta_deg, phi_deg = parse_grid(spec.grid)
    points = field_grid_points(r_vals, np.radians(theta_deg), np.radians(phi_deg))
    rows = []
    n_flagged = 0
    for p in points:
        base = [p.r, math.degrees(p.theta), math.degrees(p.phi)]
        try:
            sample = field_sample(qn, p, consts)
            ke = float(sample.gradS @ sample.gradS) / (2.0 * consts.m_e)
            rows.append(base + [sample.S, float(np.linalg.norm(sample.gradS)), ke,
                                sample.Q, sample.V, *sample.F_net.tolist(),
                                *sample.L.tolist(), 0])
        except CausalModelError:
            n_flagged += 1
            rows.append(base + [math.nan] * 11 + [1])
    meta = {"kind": "fields", "n": qn.n, "l": qn.l, "m": qn.m,
            "points": len(points), "flagged_nodes": n_flagged}
    with _open_out(spec.out) as stream:
        write_table(stream, meta, FIELD_COLUMNS, rows, spec.fmt)
    return 0


def cmd_report(spec: RunSpec, consts: PhysConsts) -> int:
    """Energy bookkeeping of one state, printed in units of 1e-19 J."""
    qn = QuantumNumbers(spec.n, spec.l, spec.m)
    rep = energy_report(qn, consts, r_e=spec.r_e)
    r_e = spec.r_e if spec.r_e is not None else qn.n**2 * consts.a_mu / consts.Z
    closure = rep.E_n - (rep.KE_CI + rep.V + rep.Q)
    if spec.fmt == "json":
        payload = {"n": qn.n, "l": qn.l, "m": qn.m, "r_e_m": r_e,
                   **{k: _meta_value(v) for k, v in asdict(rep).items()},
                   "closure_J": closure}
        with _open_out(spec.out) as stream:
            json.dump(payload, stream, indent=1)
            stream.write("\n")
        return 0
    scale = 1e-19
    lines = [f"state n={qn.n} l={qn.l} m={qn.m}, r_e = {r_e:.5e} m",
             "(energies in 1e-19 J)"]
    for label, value in [("E_n", rep.E_n), ("phi term", rep.phi_term),
                         ("E_CI", rep.E_CI), ("KE_CI", rep.KE_CI),
                         ("KE_Bohr", rep.KE_Bohr), ("V", rep.V), ("Q", rep.Q)]:
        lines.append(f"  {label:<8} = {value / scale:8.3f}")
    lines.append(f"  closure E_n - (KE_CI + V + Q) = {closure / scale:.3e}")
    with _open_out(spec.out) as stream:
        stream.write("\n".join(lines) + "\n")
    return 0


def cmd_check(spec: RunSpec, consts: PhysConsts) -> int:
    """Full verification suite; exit 0 only if every check passes."""
    results = run_all(consts, seed=spec.seed)
    all_passed = all(r.passed for r in results)
    summary = {"hbar_factor": spec.perturb_hbar, "seed": spec.seed,
               "passed": all_passed,
               "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                          for r in results]}
    with _open_out(spec.out) as stream:
        if spec.fmt == "json":
            json.dump(summary, stream, indent=1)
            stream.write("\n")
        else:
            for r in results:
                stream.write(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}\n")
            n_failed = sum(not r.passed for r in results)
            stream.write(f"{len(results) - n_failed} passed, {n_failed} failed\n")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="causal-hydrogen",
        description="Electron trajectories and fields of the causal hydrogen model.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_qn=True, formats=("csv", "json")):
        if with_qn:
            p.add_argument("--n", type=int, default=2, help="principal quantum number")
            p.add_argument("--l", type=int, default=1, help="orbital quantum number")
        p.add_argument("--m", type=int, default=1, help="magnetic quantum number")
        p.add_argument("--re-m", type=float, default=None, dest="r_e",
                       help="orbit radius in m (default: n^2 a_mu / Z)")
        p.add_argument("--format", choices=formats, default=formats[0], dest="fmt")
        p.add_argument("--out", default=None, help="output path ('-' = stdout)")

    p_orbit = sub.add_parser("orbit", help="analytic orbit of an eigenstate")
    add_common(p_orbit)
    p_orbit.add_argument("--phase-deg", type=float, default=0.0,
                         help="initial azimuth offset c in degrees")
    p_orbit.add_argument("--periods", type=float, default=1.0)
    p_orbit.add_argument("--samples-per-period", type=int, default=256)

    p_rot = sub.add_parser("rotated-orbit",
                           help="RK4 orbit of the rotated (2,1,m) state")
    add_common(p_rot, with_qn=False)
    p_rot.add_argument("--beta-deg", type=float, default=0.0,
                       help="rotation angle about y in degrees")
    p_rot.add_argument("--phase-deg", type=float, default=90.0,
                       help="initial azimuth offset c in degrees")
    p_rot.add_argument("--periods", type=float, default=1.0)
    p_rot.add_argument("--dt-divisor", type=int, default=2048,
                       help="steps per orbit period")
    p_rot.add_argument("--record-every", type=int, default=8)

    p_fields = sub.add_parser("fields", help="field layer on a spherical grid")
    add_common(p_fields)
    p_fields.add_argument("--grid", default=None,
                          help="'r=...;theta=...;phi=...' (r in m, angles deg; "
                               "values 'a,b,c' or 'lo:hi:count'; default: orbit ring)")

    p_report = sub.add_parser("report", help="energy bookkeeping of one state")
    add_common(p_report, formats=("text", "json"))

    p_check = sub.add_parser("check", help="run the verification suite")
    p_check.add_argument("--format", choices=("text", "json"), default="text",
                         dest="fmt")
    p_check.add_argument("--out", default=None)
    p_check.add_argument("--seed", type=int, default=DEFAULT_SEED,
                         help="seed for the randomized oracle points")
    p_check.add_argument("--perturb-hbar", type=float, default=1.0,
                         help="multiply hbar by this factor (sensitivity smoke test)")
    return parser


def _spec_from_args(args: argparse.Namespace) -> RunSpec:
    kwargs = {"command": args.command}
    for field, attr in [("n", "n"), ("l", "l"), ("m", "m"), ("r_e", "r_e"),
                        ("periods", "periods"), ("dt_divisor", "dt_divisor"),
                        ("record_every", "record_every"),
                        ("samples_per_period", "samples_per_period"),
                        ("grid", "grid"), ("fmt", "fmt"), ("out", "out"),
                        ("seed", "seed"), ("perturb_hbar", "perturb_hbar")]:
        if hasattr(args, attr):
            kwargs[field] = getattr(args, attr)
    if hasattr(args, "beta_deg"):
        kwargs["beta"] = math.radians(args.beta_deg)
    if hasattr(args, "phase_deg"):
        kwargs["phase"] = math.radians(args.phase_deg)
    return RunSpec(**kwargs)


COMMANDS = {
    "orbit": cmd_orbit,
    "rotated-orbit": cmd_rotated_orbit,
    "fields": cmd_fields,
    "report": cmd_report,
    "check": cmd_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    spec = _spec_from_args(args)
    consts = constants_from_env()
    if spec.perturb_hbar != 1.0:
        consts = make_constants(hbar=consts.hbar * spec.perturb_hbar,
                                m_e=consts.m_e, M_nucleus=consts.M_nucleus,
                                e_charge=consts.e_charge, eps0=consts.eps0,
                                Z=consts.Z)
    try:
        return COMMANDS[spec.command](spec, consts)
    except NodeError as exc:
        print(f"error: trajectory reached the nodal set: {exc}", file=sys.stderr)
        return 3
    except (CausalModelError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
