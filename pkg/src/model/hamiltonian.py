"""
Discretized single-excitation Hamiltonian.

The static part holds the diagonal energies (Delta, Delta, w_1..w_N,
Delta, Delta) and the real bath couplings g_{i,j} = sqrt(J_i(j*step)*step).
Only four entries depend on time: the pump couples Spin1 <-> ModeA1 and
the Stokes pulse couples ModeA2 <-> Spin2.

Energies are measured in a frame shifted by +Delta from the rotating
frame, where the sector diagonal reads (0, 0, w_j - Delta, 0, 0).
"""

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..models import ModelParams, PulsePair
from .basis import Basis, build_basis
from .spectral import eval_pulses, eval_spectral_density


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class HamiltonianSystem(BaseModel):
    """
    Time-independent matrix skeleton plus the pulse-modulated entries.

    Arrays are read-only so one system can be shared between propagations.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    basis: Basis
    static: np.ndarray
    pulses: PulsePair
    loss: np.ndarray
    couplings1: np.ndarray
    couplings2: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def frame_offset(self) -> float:
        """Common spin/mode energy (Delta) on the static diagonal."""
        return float(self.static[Basis.SPIN1, Basis.SPIN1])

    @property
    def pump_slot(self) -> tuple[int, int]:
        return Basis.SPIN1, Basis.MODE_A1

    @property
    def stokes_slot(self) -> tuple[int, int]:
        return self.basis.mode_a2, self.basis.spin2


def build_hamiltonian(params: ModelParams) -> HamiltonianSystem:
    """
    Assemble the static matrix, coupling vectors and loss vector.

    Raises:
        BasisError: If the discretization is invalid
    """
    basis = build_basis(params)
    freqs = basis.frequencies()
    step = basis.step

    g1 = np.sqrt(eval_spectral_density(params.spectral1, freqs) * step)
    g2 = np.sqrt(eval_spectral_density(params.spectral2, freqs) * step)

    m = basis.dim
    static = np.zeros((m, m), dtype=float)
    diagonal = np.full(m, params.detuning, dtype=float)
    diagonal[basis.bath] = freqs
    static[np.diag_indices(m)] = diagonal

    static[Basis.MODE_A1, basis.bath] = g1
    static[basis.bath, Basis.MODE_A1] = g1
    static[basis.mode_a2, basis.bath] = g2
    static[basis.bath, basis.mode_a2] = g2

    loss = np.zeros(m, dtype=float)
    loss[basis.bath] = params.loss

    logger.debug(
        f"Built Hamiltonian: N={basis.n_modes}, M={m}, "
        f"sum g1^2={float(np.sum(g1 ** 2)):.6g}, sum g2^2={float(np.sum(g2 ** 2)):.6g}")

    return HamiltonianSystem(
        basis=basis,
        static=_frozen(static),
        pulses=params.pulses,
        loss=_frozen(loss),
        couplings1=_frozen(g1),
        couplings2=_frozen(g2),
    )


def hamiltonian_at(sys: HamiltonianSystem, t: float) -> np.ndarray:
    """H(t): the static part with the four pulse entries filled in."""
    pump, stokes = eval_pulses(sys.pulses, t)
    h = sys.static.astype(complex)

    i, j = sys.pump_slot
    h[i, j] = h[j, i] = pump
    i, j = sys.stokes_slot
    h[i, j] = h[j, i] = stokes
    return h
