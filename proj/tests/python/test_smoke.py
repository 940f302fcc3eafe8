"""Smoke tests for the python bindings."""

import math

import pytest

lipkin = pytest.importorskip("lipkin")


def test_two_site_ground_state():
    p = lipkin.ModelParams(omega=2, eps=1.0, vx=2.0, chi=0.0)
    gs = lipkin.ground_state(p)
    assert gs.parity == 1
    assert gs.energy == pytest.approx(-math.sqrt(2.0), abs=1e-12)
    assert gs.coeffs[0] == pytest.approx(math.cos(math.pi / 8), abs=1e-10)

    m = lipkin.measures_from_coeffs(gs.coeffs, 2)
    assert m.concurrence.value == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-10)
    assert m.concurrence.kind == lipkin.ConcurrenceKind.parallel
    assert m.negativity == pytest.approx(0.5 * m.concurrence.value, abs=1e-12)


def test_level_measures_anchors():
    k1 = lipkin.k_state_measures(50, 1)
    assert k1.concurrence.value == pytest.approx(0.04, abs=1e-12)
    k25 = lipkin.k_state_measures(50, 25)
    assert k25.one_body_E == pytest.approx(100.0, abs=1e-10)
    assert k25.updown_E == pytest.approx(math.log2(math.comb(50, 25)), abs=1e-9)


def test_mean_field_and_projection():
    p = lipkin.ModelParams(omega=50, eps=1.0, vx=2.0, chi=0.5)
    sol = lipkin.mf_solve(p)
    assert math.cos(sol.theta) == pytest.approx(0.5, abs=1e-12)
    m = lipkin.mf_measures(sol, 0.5, 50)
    assert m.negativity == pytest.approx(0.375, abs=1e-12)

    st = lipkin.pmf_state(sol.theta, 50, 1)
    assert sum(c * c for c in st.coeffs) == pytest.approx(1.0, abs=1e-10)
    assert all(st.coeffs[k] == 0.0 for k in range(1, 51, 2))


def test_rpa_paths():
    p = lipkin.ModelParams(omega=50, eps=1.0, vx=0.5, chi=0.0)
    sol = lipkin.rpa_solve(p)
    assert sol.lambda_ == pytest.approx(math.sqrt(0.5), abs=1e-12)
    c = lipkin.rpa_concurrence_asymptotic(p)
    assert c.value == pytest.approx((1.0 - math.sqrt(0.5)) / 49.0, abs=1e-12)
    m = lipkin.prpa_measures(p)
    assert m.concurrence.value > 0.0


def test_sweep_roundtrip():
    cfg = lipkin.figure_preset("fig1")
    cfg.steps = 5
    cfg.chi_list = [0.5]
    csv = lipkin.sweep_csv(cfg)
    lines = csv.strip().split("\n")
    assert lines[0] == lipkin.result_header()
    assert len(lines) == 1 + 5
    assert lipkin.sweep_csv(cfg) == csv  # deterministic


def test_validation_errors():
    with pytest.raises(ValueError):
        lipkin.ModelParams(omega=0)
    with pytest.raises(ValueError):
        lipkin.binary_entropy(1.5)
