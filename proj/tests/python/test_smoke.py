import math

import pytest

import slaumzi


def test_time_constants_and_magnification():
    tc = slaumzi.time_constants(1.56e-9, 0.27e-9, group_index=300.0)
    assert tc.tau_sl == pytest.approx(1.56e-9 + 300 * 0.27e-9)
    ng = slaumzi.group_index_from_magnification(1.56e-9, 0.27e-9, 257.0)
    assert 1730 < ng < 1745


def test_laser_and_tables():
    spec = slaumzi.LaserSpec(632.8e-9, 10e-3, 0.7, 0.9)
    cav = slaumzi.cavity_decay(spec)
    assert slaumzi.cavity_decay(spec, literal=True).decay_rate == pytest.approx(2 * cav.decay_rate)
    linewidth, tau = slaumzi.schawlow_townes(spec, cav)
    assert linewidth * tau == pytest.approx(1.0)
    assert all(row[4] for row in slaumzi.worked_numbers())
    t = slaumzi.quantum_limit_mmfs_table()
    assert len(t["values"]) == 4


def test_optimum_and_sef():
    assert slaumzi.minimize_umzi_cost() == pytest.approx(1.0, abs=1e-6)
    flux = 1.6e-3 / (6.62607015e-34 * 299792458 / 794.979e-9)
    assert slaumzi.sef(1.83e-9, 1.0, 423e-9, flux) == pytest.approx(161, rel=0.03)


def test_fits_round_trip():
    swing = [2.5e4 * i for i in range(1, 13)]
    v = [2.2e-10 * f + 5.4e-5 for f in swing]
    r = slaumzi.ksum_fit(swing, v)
    assert r["slope"] == pytest.approx(2.2e-10, rel=1e-9)
    assert r["mmfs"] == pytest.approx(5.4e-5 / 2.2e-10, rel=1e-9)
    v0 = [0.1 * i for i in range(1, 10)]
    s = [0.05 * math.sqrt(x) + 0.001 for x in v0]
    assert slaumzi.noise_law_fit(v0, s)["model"] == "sqrt"


def test_eit_steady_state():
    rho = slaumzi.steady_state(slaumzi.FourLevelScheme.reference())
    assert rho.shape == (4, 4)
    assert abs(rho.trace() - 1) < 1e-12
    assert abs(rho - rho.conj().T).max() < 1e-12


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        slaumzi.sef(0.0, 0.5, 1e-6, 1e15)
    with pytest.raises(slaumzi.NumericalError):
        slaumzi.steady_state(slaumzi.FourLevelScheme())
    with pytest.raises(ArithmeticError):
        slaumzi.steady_state(slaumzi.FourLevelScheme())


def test_noise_chain():
    cfg = slaumzi.NoiseChainConfig.c0_reference()
    assert slaumzi.chain_gain_closed_form(cfg) == pytest.approx(5.26, rel=0.01)
    assert slaumzi.balanced_mmps(1e6, math.pi / 2) == pytest.approx(1e-3)
