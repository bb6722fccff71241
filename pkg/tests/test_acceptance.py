"""Acceptance gate: the ten headline claims, one test and one printed line each.

Every test delegates to the corresponding check in causal_hydrogen.checks so
the CLI `check` subcommand and this gate can never drift apart.  Run with
`pytest -s tests/test_acceptance.py` to see the PASS/FAIL lines inline.
"""
import inspect

from causal_hydrogen.checks import (DEFAULT_SEED, check_angular_momentum_magnitude,
                                    check_dynamics_equivalence, check_energy_table,
                                    check_geometry_n2, check_geometry_n4,
                                    check_net_force_magnitude, check_normalization,
                                    check_oracle_equivalence, check_orbit_invariants,
                                    check_rotation_invariants, check_speeds,
                                    check_vector_model_properties)


def _run(fn, consts):
    kwargs = {"seed": DEFAULT_SEED} if "seed" in inspect.signature(fn).parameters else {}
    result = fn(consts, **kwargs)
    print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}: {result.detail}")
    assert result.passed, f"{result.name}: {result.detail}"


def test_orbit_geometry_n2_l1_matches_table(consts):
    _run(check_geometry_n2, consts)


def test_orbit_geometry_n4_l3_matches_table(consts):
    _run(check_geometry_n4, consts)


def test_orbital_speeds(consts):
    _run(check_speeds, consts)


def test_net_force_magnitude_both_frames(consts):
    _run(check_net_force_magnitude, consts)


def test_angular_momentum_magnitude_and_lz(consts):
    _run(check_angular_momentum_magnitude, consts)


def test_energy_partition_printed_values(consts):
    _run(check_energy_table, consts)


def test_finite_difference_oracles_match_closed_forms(consts):
    _run(check_oracle_equivalence, consts)


def test_rk4_orbit_matches_analytic_circle_at_fourth_order(consts):
    _run(check_dynamics_equivalence, consts)


def test_vector_model_holds_for_all_l_up_to_4(consts):
    _run(check_vector_model_properties, consts)


def test_normalization_and_radial_mode(consts):
    _run(check_normalization, consts)


def test_rotation_invariants(consts):
    _run(check_rotation_invariants, consts)


def test_orbit_invariants(consts):
    _run(check_orbit_invariants, consts)
