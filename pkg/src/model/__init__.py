"""
Model package for the straddle STIRAP simulator.

Contains the discretized physical model: spectral densities, pulses, the
single-excitation basis and the time-dependent Hamiltonian.
"""

from .spectral import eval_spectral_density, eval_pulses, ModelError
from .basis import Basis, BasisError, build_basis
from .hamiltonian import HamiltonianSystem, build_hamiltonian, hamiltonian_at

__all__ = [
    'eval_spectral_density',
    'eval_pulses',
    'ModelError',
    'Basis',
    'BasisError',
    'build_basis',
    'HamiltonianSystem',
    'build_hamiltonian',
    'hamiltonian_at'
]
