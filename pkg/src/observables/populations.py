"""
Fidelities and population partitions of a trajectory.

|psi_i> = Spin1 and |psi_f> = Spin2 are basis states, so the fidelities
<psi|rho(t)|psi> are plain diagonal populations. Values at sample times
are exact; between samples the populations are linearly interpolated.
"""

from typing import Optional

import numpy as np
from loguru import logger

from ..dynamics.trajectory import StateTrajectory
from ..model.basis import Basis
from ..models import PopulationPartition

# Slack allowed on the window edges when matching a requested time
_TIME_EPS = 1e-12

# Largest excursion outside [0, 1] treated as integrator noise
_POPULATION_SLACK = 1e-6


class ObservableError(Exception):
    """Custom exception for observables requested outside a trajectory or on unphysical states."""
    pass


def populations_at(traj: StateTrajectory, t: float) -> np.ndarray:
    """
    Populations (M + 1 entries, vacuum last) at time t.

    Raises:
        ObservableError: If t lies outside the sampled window
    """
    times = traj.times
    span = max(1.0, abs(traj.t_start), abs(traj.t_end))
    if t < traj.t_start - _TIME_EPS * span or t > traj.t_end + _TIME_EPS * span:
        error_msg = f"t={t} is outside the sampled window [{traj.t_start}, {traj.t_end}]"
        logger.error(error_msg)
        raise ObservableError(error_msg)

    pops = traj.populations
    k = int(np.searchsorted(times, t))
    if k < len(times) and abs(times[k] - t) <= _TIME_EPS * span:
        return pops[k]
    if k == 0:
        return pops[0]
    if k >= len(times):
        return pops[-1]
    if abs(times[k - 1] - t) <= _TIME_EPS * span:
        return pops[k - 1]

    w = (t - times[k - 1]) / (times[k] - times[k - 1])
    return (1 - w) * pops[k - 1] + w * pops[k]


def fidelity_initial(traj: StateTrajectory, t: float, index: int = Basis.SPIN1) -> float:
    """F1(t) = <psi_i|rho(t)|psi_i>, the population left on the initial spin."""
    return float(populations_at(traj, t)[index])


def fidelity_target(traj: StateTrajectory, t: float, index: Optional[int] = None) -> float:
    """F2(t) = <psi_f|rho(t)|psi_f>, the population on the target spin (Spin2 by default)."""
    target = traj.basis.spin2 if index is None else index
    return float(populations_at(traj, t)[target])


def final_fidelity(traj: StateTrajectory, index: Optional[int] = None) -> float:
    """F = F2(infinity), realized as F2(t_end)."""
    return fidelity_target(traj, traj.t_end, index)


def _partition(basis: Basis, pops: np.ndarray) -> PopulationPartition:
    """
    Group populations, clipping integrator noise into [0, 1].

    Raises:
        ObservableError: If a group lies further than the noise slack outside [0, 1]
    """
    groups = {
        "p_spin1": float(pops[Basis.SPIN1]),
        "p_spin2": float(pops[basis.spin2]),
        "p_modes": float(pops[Basis.MODE_A1] + pops[basis.mode_a2]),
        "p_continuum": float(np.sum(pops[basis.bath])),
        "p_vacuum": float(pops[basis.vacuum]),
    }
    for name, value in groups.items():
        if not -_POPULATION_SLACK <= value <= 1 + _POPULATION_SLACK:
            error_msg = f"{name} = {value:.3g} is not a population"
            logger.error(error_msg)
            raise ObservableError(error_msg)
    return PopulationPartition(**{name: min(max(value, 0.0), 1.0) for name, value in groups.items()})


def population_partition(traj: StateTrajectory, t: float) -> PopulationPartition:
    """Populations grouped into spins, discrete modes, continuum and vacuum."""
    return _partition(traj.basis, populations_at(traj, t))


def partition_series(traj: StateTrajectory) -> dict[str, np.ndarray]:
    """
    Column arrays over all samples: t, F1, F2, p_modes, p_continuum,
    p_vacuum, norm.
    """
    basis = traj.basis
    pops = traj.populations
    return {
        "t": traj.times,
        "F1": pops[:, Basis.SPIN1],
        "F2": pops[:, basis.spin2],
        "p_modes": pops[:, Basis.MODE_A1] + pops[:, basis.mode_a2],
        "p_continuum": pops[:, basis.bath].sum(axis=1),
        "p_vacuum": pops[:, basis.vacuum],
        "norm": traj.norms,
    }
