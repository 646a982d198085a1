#!/usr/bin/env python3
"""
Tests for fidelities and population partitions.
"""

import sys
from functools import lru_cache
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np  # noqa: E402
import pytest  # noqa: E402

from src.dynamics import StateTrajectory, evolve_lindblad, evolve_pure  # noqa: E402
from src.model import Basis, build_hamiltonian  # noqa: E402
from src.models import IntegratorConfig, ModelParams, TimeWindow  # noqa: E402
from src.observables import (  # noqa: E402
    ObservableError, fidelity_initial, fidelity_target, final_fidelity, partition_series,
    population_partition, populations_at,
)

CFG = IntegratorConfig()


@lru_cache(maxsize=None)
def run(**overrides):
    params = ModelParams.baseline().with_overrides(overrides)
    window = TimeWindow.around_pulses(params.pulses)
    return evolve_pure(build_hamiltonian(params), window, CFG)


def test_fidelities_at_window_start():
    traj = run()
    assert fidelity_initial(traj, traj.t_start) == 1.0
    assert fidelity_target(traj, traj.t_start) == 0.0


def test_no_pump_leaves_spin1_populated():
    traj = run(peak=0.0)
    for t in (traj.t_start, 0.0, traj.t_end):
        assert fidelity_initial(traj, t) == pytest.approx(1.0, abs=1e-8)


def test_baseline_final_fidelities():
    traj = run()
    assert fidelity_initial(traj, traj.t_end) < 0.05
    assert fidelity_target(traj, traj.t_end) >= 0.95
    assert final_fidelity(traj) == fidelity_target(traj, traj.t_end)


def test_partition_at_window_start():
    p = population_partition(run(), run().t_start)
    assert (p.p_spin1, p.p_spin2, p.p_modes, p.p_continuum, p.p_vacuum) == (1.0, 0.0, 0.0, 0.0, 0.0)


def test_partition_sums_to_one_without_loss():
    traj = run()
    for t in np.linspace(traj.t_start, traj.t_end, 9):
        p = population_partition(traj, float(t))
        assert p.total == pytest.approx(1.0, abs=1e-8)
        assert abs(p.p_vacuum) < 1e-8


def test_partition_sums_to_one_with_loss():
    traj = run(loss=0.5)
    p = population_partition(traj, traj.t_end)
    assert p.total == pytest.approx(1.0, abs=1e-8)
    assert p.p_vacuum > 0.0


def test_time_outside_window_rejected():
    traj = run()
    with pytest.raises(ObservableError):
        fidelity_target(traj, traj.t_end + 1.0)
    with pytest.raises(ObservableError):
        population_partition(traj, traj.t_start - 1.0)


def test_fidelities_never_exceed_one_together():
    for overrides in ({}, {"loss": 0.5}, {"detuning": 5.0}):
        series = partition_series(run(**overrides))
        assert np.all(series["F1"] + series["F2"] <= 1 + 1e-10)


def test_interpolation_between_samples():
    traj = run()
    t0, t1 = traj.times[100], traj.times[101]
    midpoint = populations_at(traj, (t0 + t1) / 2)
    expected = (traj.populations[100] + traj.populations[101]) / 2
    assert np.allclose(midpoint, expected, rtol=0, atol=1e-14)


def test_asymmetric_coupling_loses_to_continuum():
    symmetric, asymmetric = run(), run(eta2=0.5)
    assert final_fidelity(asymmetric) < final_fidelity(symmetric)
    p_sym = population_partition(symmetric, symmetric.t_end)
    p_asym = population_partition(asymmetric, asymmetric.t_end)
    assert p_asym.p_continuum > p_sym.p_continuum


def test_large_detuning_traps_population_in_modes():
    traj = run(detuning=10.0)
    p = population_partition(traj, traj.t_end)
    assert p.p_modes > p.p_continuum


def test_lindblad_vacuum_is_absorbing():
    params = ModelParams(step=2.0 / 16, loss=0.5)
    traj = evolve_lindblad(build_hamiltonian(params), TimeWindow.around_pulses(params.pulses), CFG)
    series = partition_series(traj)
    assert np.all(np.diff(series["p_vacuum"]) >= -1e-10)
    assert series["p_vacuum"][-1] > 0.0


def lindblad_snapshot(diagonal: dict[int, float]) -> StateTrajectory:
    basis = build_hamiltonian(ModelParams(step=0.5)).basis
    rho = np.zeros((basis.dim + 1, basis.dim + 1), dtype=complex)
    for index, value in diagonal.items():
        rho[index, index] = value
    return StateTrajectory(kind="lindblad", basis=basis, times=np.array([0.0, 1.0]),
                           densities=np.stack([rho, rho]))


def test_partition_clips_integrator_noise():
    basis = build_hamiltonian(ModelParams(step=0.5)).basis
    traj = lindblad_snapshot({Basis.SPIN1: 1e-9, basis.spin2: 1.0, basis.bath_index(2): -1e-9})
    p = population_partition(traj, 1.0)
    assert p.p_continuum == 0.0
    assert p.p_spin2 == 1.0


def test_partition_rejects_unphysical_state():
    basis = build_hamiltonian(ModelParams(step=0.5)).basis
    traj = lindblad_snapshot({basis.spin2: 1.5, basis.bath_index(2): -0.5})
    with pytest.raises(ObservableError):
        population_partition(traj, 0.0)


def test_partition_series_columns():
    series = partition_series(run())
    assert list(series) == ["t", "F1", "F2", "p_modes", "p_continuum", "p_vacuum", "norm"]
    assert all(len(column) == CFG.samples for column in series.values())


def main() -> int:
    print("🧪 Testing observables...")
    tests = [(name, fn) for name, fn in globals().items() if name.startswith("test_") and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"  ✅ {name}")
        except Exception as e:
            failed += 1
            print(f"  ❌ {name}: {e!r}")

    if failed:
        print(f"\n❌ {failed}/{len(tests)} observables tests failed")
        return 1
    print(f"\n🎉 All {len(tests)} observables tests passed!")
    return 0


if __name__ == "__main__":
    sys.exit(main())
