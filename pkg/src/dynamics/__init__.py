"""
Dynamics package for the straddle STIRAP simulator.

Contains the pure-state (non-Hermitian) propagator used in production and
the full Lindblad propagator used as its validation oracle.
"""

from .integrator import IntegrationError
from .trajectory import StateTrajectory, initial_state
from .pure import effective_hamiltonian_at, evolve_pure
from .lindblad import evolve_lindblad, lindblad_dissipator

__all__ = [
    'IntegrationError',
    'StateTrajectory',
    'initial_state',
    'effective_hamiltonian_at',
    'evolve_pure',
    'evolve_lindblad',
    'lindblad_dissipator'
]
