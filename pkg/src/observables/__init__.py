"""
Observables package for the straddle STIRAP simulator.

Contains the fidelity metrics and the population partition of a trajectory.
"""

from .populations import (
    ObservableError,
    fidelity_initial,
    fidelity_target,
    final_fidelity,
    population_partition,
    partition_series,
    populations_at,
)

__all__ = [
    'ObservableError',
    'fidelity_initial',
    'fidelity_target',
    'final_fidelity',
    'population_partition',
    'partition_series',
    'populations_at'
]
