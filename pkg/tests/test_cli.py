import json
import math

import numpy as np
import pytest

from causal_hydrogen.cli import main, parse_grid
from causal_hydrogen.constants import default_constants
from causal_hydrogen.kinematics import bohr_energy, orbit_geometry, position, speed
from causal_hydrogen.wavefunctions import QuantumNumbers

_CONSTS = default_constants()


def read_csv(path):
    meta, columns, rows = {}, None, []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            meta[key.strip()] = value.strip()
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append([float(tok) for tok in line.split(",")])
    return meta, columns, np.array(rows)


def test_orbit_csv_roundtrip(tmp_path):
    out = tmp_path / "orbit.csv"
    rc = main(["orbit", "--n", "2", "--l", "1", "--m", "1",
               "--samples-per-period", "8", "--out", str(out)])
    assert rc == 0
    meta, columns, rows = read_csv(out)
    assert columns == ["t_s", "x_m", "y_m", "z_m", "vx", "vy", "vz",
                       "Lx", "Ly", "Lz", "Fx", "Fy", "Fz"]
    assert rows.shape == (9, 13)
    geom = orbit_geometry(QuantumNumbers(2, 1, 1), _CONSTS)
    # %.17g metadata and samples round-trip to the exact doubles
    assert float(meta["r_0_m"]) == geom.r_0
    assert float(meta["period_s"]) == geom.period
    assert meta["sense"] == "counterclockwise"
    assert rows[0, 1:4] == pytest.approx(position(geom, 0.0), rel=1e-16)
    assert np.linalg.norm(rows[:, 4:7], axis=1) == pytest.approx(
        speed(geom), rel=1e-12)


def test_orbit_stationary_state(tmp_path):
    out = tmp_path / "m0.csv"
    assert main(["orbit", "--n", "2", "--l", "1", "--m", "0", "--out", str(out)]) == 0
    meta, _, rows = read_csv(out)
    assert meta["stationary"] == "True"
    assert rows.shape == (1, 13)
    assert rows[0, 3] == pytest.approx(4.0 * _CONSTS.a_mu, rel=1e-14)
    assert rows[0, 4:] == pytest.approx(np.zeros(9))


def test_orbit_rejects_invalid_state(capsys):
    assert main(["orbit", "--n", "2", "--l", "1", "--m", "2"]) == 2
    assert "m must satisfy" in capsys.readouterr().err


def test_unknown_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["orbit", "--frequency", "1"])
    assert exc.value.code == 2


def test_rotated_orbit_beta_zero_matches_analytic(tmp_path):
    rot_file = tmp_path / "rot.csv"
    orb_file = tmp_path / "orb.csv"
    assert main(["rotated-orbit", "--m", "1", "--beta-deg", "0",
                 "--dt-divisor", "512", "--record-every", "8",
                 "--out", str(rot_file)]) == 0
    assert main(["orbit", "--n", "2", "--l", "1", "--m", "1",
                 "--phase-deg", "90", "--samples-per-period", "64",
                 "--out", str(orb_file)]) == 0
    _, _, rot = read_csv(rot_file)
    _, _, orb = read_csv(orb_file)
    assert rot.shape == orb.shape
    r_e = 4.0 * _CONSTS.a_mu
    assert np.max(np.abs(rot[:, 1:4] - orb[:, 1:4])) < 1e-6 * r_e


def test_rotated_orbit_header_and_closure(tmp_path):
    out = tmp_path / "rot30.csv"
    assert main(["rotated-orbit", "--m", "-1", "--beta-deg", "30",
                 "--dt-divisor", "512", "--out", str(out)]) == 0
    meta, _, rows = read_csv(out)
    assert float(meta["beta_deg"]) == pytest.approx(30.0)
    assert float(meta["closure_error_rel"]) < 1e-6
    assert "dt_s" in meta
    # mirrored start point, published orbital speed
    geom = orbit_geometry(QuantumNumbers(2, 1, -1), _CONSTS)
    beta = math.radians(30.0)
    assert rows[0, 1] == pytest.approx(-geom.z_0 * math.sin(beta), rel=1e-12)
    assert rows[0, 3] == pytest.approx(geom.z_0 * math.cos(beta), rel=1e-12)
    speeds = np.linalg.norm(rows[:, 4:7], axis=1)
    assert speeds == pytest.approx(7.73e5, rel=5e-3)


def test_rotated_orbit_node_exit_code(capsys):
    assert main(["rotated-orbit", "--m", "1", "--beta-deg", "30",
                 "--re-m", "1e-18"]) == 3
    assert "nodal" in capsys.readouterr().err


def test_rotated_orbit_m0_stationary(tmp_path):
    out = tmp_path / "rot0.csv"
    assert main(["rotated-orbit", "--m", "0", "--beta-deg", "30",
                 "--out", str(out)]) == 0
    _, _, rows = read_csv(out)
    assert rows.shape == (1, 13)
    r_e = 4.0 * _CONSTS.a_mu
    assert rows[0, 1] == pytest.approx(-r_e * 0.5, rel=1e-12)
    assert rows[0, 4:] == pytest.approx(np.zeros(9))


def test_fields_default_ring_constant_force(tmp_path):
    out = tmp_path / "ring.csv"
    assert main(["fields", "--n", "2", "--l", "1", "--m", "1",
                 "--out", str(out)]) == 0
    meta, columns, rows = read_csv(out)
    f_mag = np.linalg.norm(rows[:, columns.index("Fx"):columns.index("Fz") + 1], axis=1)
    assert f_mag == pytest.approx(3.64e-9, rel=1e-2)
    ke = rows[:, columns.index("KE")]
    q = rows[:, columns.index("Q")]
    v = rows[:, columns.index("V")]
    assert ke + q + v == pytest.approx(bohr_energy(2, _CONSTS), rel=1e-12)
    assert not np.any(rows[:, columns.index("node")])


def test_fields_m0_forces_vanish(tmp_path):
    out = tmp_path / "m0grid.csv"
    assert main(["fields", "--n", "2", "--l", "1", "--m", "0",
                 "--out", str(out)]) == 0
    _, columns, rows = read_csv(out)
    force = rows[:, columns.index("Fx"):columns.index("Fz") + 1]
    assert force == pytest.approx(np.zeros_like(force))
    grad = rows[:, columns.index("gradS_mag")]
    assert grad == pytest.approx(np.zeros_like(grad))


def test_fields_grid_flags_nodal_rows(tmp_path):
    out = tmp_path / "nodal.json"
    assert main(["fields", "--n", "2", "--l", "1", "--m", "1", "--format", "json",
                 "--grid", "r=2e-10;theta=0,90;phi=0", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["meta"]["flagged_nodes"] == 1
    node_col = payload["columns"].index("node")
    s_col = payload["columns"].index("S")
    flagged = [row for row in payload["rows"] if row[node_col] == 1]
    assert len(flagged) == 1 and flagged[0][s_col] is None


def test_parse_grid():
    r, theta, phi = parse_grid("r=1e-10,2e-10;theta=0:180:5;phi=45")
    assert r == pytest.approx([1e-10, 2e-10])
    assert theta == pytest.approx([0.0, 45.0, 90.0, 135.0, 180.0])
    assert phi == pytest.approx([45.0])
    with pytest.raises(ValueError):
        parse_grid("r=1e-10;theta=90")         # phi missing
    with pytest.raises(ValueError):
        parse_grid("r=1e-10;theta=90;psi=0")   # unknown axis


def test_report_text(capsys):
    assert main(["report", "--n", "2", "--l", "1", "--m", "1"]) == 0
    out = capsys.readouterr().out
    for token in ("-5.447", "-0.003", "2.722", "-10.893", "2.725"):
        assert token in out


def test_report_json(capsys):
    assert main(["report", "--n", "2", "--l", "1", "--m", "0",
                 "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["E_CI"] == payload["E_n"]
    assert payload["KE_CI"] == 0.0
    assert abs(payload["closure_J"]) < 1e-30
    assert payload["Q"] == pytest.approx(5.447e-19, rel=1e-3)


def test_check_passes_by_default(capsys):
    assert main(["check"]) == 0
    out = capsys.readouterr().out
    assert "12 passed, 0 failed" in out
    assert "FAIL" not in out


def test_check_perturbed_constants_fail_named(capsys):
    assert main(["check", "--perturb-hbar", "1.05", "--format", "json"]) == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is False
    failed = [c["name"] for c in payload["checks"] if not c["passed"]]
    assert "energy-table" in failed and "geometry-n2-l1" in failed


def test_output_files_are_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["rotated-orbit", "--m", "1", "--beta-deg", "30",
            "--dt-divisor", "256", "--record-every", "32"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_constants_env_override(tmp_path, monkeypatch, capsys):
    path = tmp_path / "alt.txt"
    path.write_text(f"hbar = {2.0 * _CONSTS.hbar}\n")
    assert main(["report", "--n", "1", "--l", "0", "--m", "0",
                 "--format", "json"]) == 0
    base = json.loads(capsys.readouterr().out)["E_n"]
    monkeypatch.setenv("CAUSAL_HYDROGEN_CONSTANTS", str(path))
    assert main(["report", "--n", "1", "--l", "0", "--m", "0",
                 "--format", "json"]) == 0
    scaled = json.loads(capsys.readouterr().out)["E_n"]
    assert scaled == pytest.approx(base / 4.0, rel=1e-12)


def test_json_trajectory_schema(capsys):
    assert main(["orbit", "--n", "4", "--l", "3", "--m", "-2",
                 "--samples-per-period", "4", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert set(payload) == {"meta", "columns", "rows"}
    assert payload["meta"]["m"] == -2
    assert payload["columns"][0] == "t_s"
    assert len(payload["rows"]) == 5
    assert all(len(row) == 13 for row in payload["rows"])
