"""
Sampled solution of one propagation.

A trajectory holds either amplitude vectors over the single-excitation
basis (pure-state path, vacuum implicit as 1 - |psi|^2) or full density
matrices including the vacuum slot (Lindblad path). Observables only ever
need the diagonal populations, which both paths expose in the same
(samples, M + 1) layout with the vacuum last.
"""

from functools import cached_property
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..model.basis import Basis


def initial_state(basis: Basis, index: int = Basis.SPIN1) -> np.ndarray:
    """Amplitude vector with all weight on one basis state (Spin1 by default)."""
    psi = np.zeros(basis.dim, dtype=complex)
    psi[index] = 1.0
    return psi


class StateTrajectory(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["pure", "lindblad"]
    basis: Basis
    times: np.ndarray
    amplitudes: Optional[np.ndarray] = None
    densities: Optional[np.ndarray] = None

    @model_validator(mode="after")
    def check_states(self) -> "StateTrajectory":
        samples = len(self.times)
        if self.kind == "pure":
            if self.amplitudes is None or self.amplitudes.shape != (samples, self.basis.dim):
                raise ValueError("pure trajectory needs amplitudes of shape (samples, M)")
        else:
            d = self.basis.dim + 1
            if self.densities is None or self.densities.shape != (samples, d, d):
                raise ValueError("lindblad trajectory needs densities of shape (samples, M+1, M+1)")
        return self

    @property
    def t_start(self) -> float:
        return float(self.times[0])

    @property
    def t_end(self) -> float:
        return float(self.times[-1])

    @cached_property
    def populations(self) -> np.ndarray:
        """Per-sample populations, shape (samples, M + 1), vacuum last."""
        if self.kind == "pure":
            sector = np.abs(self.amplitudes) ** 2
            vacuum = 1.0 - sector.sum(axis=1)
            return np.column_stack([sector, vacuum])
        return np.real(np.einsum("kii->ki", self.densities))

    @cached_property
    def norms(self) -> np.ndarray:
        """Weight left in the single-excitation sector at each sample."""
        return self.populations[:, :-1].sum(axis=1)

    @cached_property
    def traces(self) -> np.ndarray:
        """Total trace; identically 1 for the pure path by construction."""
        if self.kind == "pure":
            return np.ones(len(self.times))
        return np.real(np.trace(self.densities, axis1=1, axis2=2))
