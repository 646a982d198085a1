"""
Pure-state propagator for the single-excitation sector.

Every jump operator b_j maps the sector to the vacuum, and nothing maps
the vacuum back. Starting from a sector state, the master equation is
therefore solved exactly by an unnormalized amplitude vector driven by
H_eff(t) = H(t) - i * diag(loss), with the lost weight 1 - |psi|^2 sitting
in the vacuum. The loss vector holds amplitude decay rates: a bath mode
left alone decays as |c_j|^2 ~ exp(-2 * gamma * t).

Amplitudes are integrated in the frame where spins and discrete modes
have zero energy, i.e. with Delta subtracted from the whole diagonal.
They differ from the H(t) solution by the global phase exp(-i * Delta * t).
"""

from typing import Optional

import numpy as np
from loguru import logger

from ..model.hamiltonian import HamiltonianSystem, hamiltonian_at
from ..model.spectral import eval_pulses
from ..models import IntegratorConfig, TimeWindow
from .integrator import integrate
from .trajectory import StateTrajectory, initial_state


def effective_hamiltonian_at(sys: HamiltonianSystem, t: float) -> np.ndarray:
    """H(t) - i * diag(loss)."""
    return hamiltonian_at(sys, t) - 1j * np.diag(sys.loss)


def evolve_pure(
    sys: HamiltonianSystem,
    window: TimeWindow,
    cfg: IntegratorConfig,
    initial: Optional[np.ndarray] = None,
) -> StateTrajectory:
    """
    Integrate d(psi)/dt = -i * H_eff(t) * psi over the window.

    Args:
        sys: Built Hamiltonian system
        window: Integration interval
        cfg: Integrator settings
        initial: Starting amplitudes (defaults to all weight on Spin1)

    Raises:
        IntegrationError: If the integrator fails
    """
    psi0 = initial_state(sys.basis) if initial is None else np.array(initial, dtype=complex)
    if psi0.shape != (sys.dim,):
        raise ValueError(f"Initial state has shape {psi0.shape}, expected ({sys.dim},)")

    h_static = sys.static - sys.frame_offset * np.eye(sys.dim) - 1j * np.diag(sys.loss)
    pulses = sys.pulses
    pi, pj = sys.pump_slot
    si, sj = sys.stokes_slot

    def rhs(t: float, psi: np.ndarray) -> np.ndarray:
        pump, stokes = eval_pulses(pulses, t)
        out = h_static @ psi
        out[pi] += pump * psi[pj]
        out[pj] += pump * psi[pi]
        out[si] += stokes * psi[sj]
        out[sj] += stokes * psi[si]
        return -1j * out

    logger.debug(f"Pure-state propagation: M={sys.dim}, window=[{window.t_start:.4g}, {window.t_end:.4g}]")
    times, amplitudes = integrate(rhs, psi0, window, cfg)

    return StateTrajectory(kind="pure", basis=sys.basis, times=times, amplitudes=amplitudes)
