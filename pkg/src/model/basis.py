"""
Single-excitation basis of the discretized model.

Fixed ordering, used by every matrix and every output column:

    0        Spin1
    1        ModeA1
    2..N+1   Bath(1)..Bath(N), with frequency w_j = j * step
    N+2      ModeA2
    N+3      Spin2
    N+4      Vacuum (only present in density matrices)
"""

from typing import ClassVar

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from ..models import ModelParams, resolve_mode_count
from .spectral import ModelError


class BasisError(ModelError):
    """Custom exception for an impossible discretization."""
    pass


class Basis(BaseModel):
    """Index map of the single-excitation states plus the vacuum slot."""
    model_config = ConfigDict(frozen=True)

    SPIN1: ClassVar[int] = 0
    MODE_A1: ClassVar[int] = 1

    n_modes: int = Field(ge=1)
    step: float = Field(gt=0)
    cutoff: float = Field(gt=0)

    @property
    def dim(self) -> int:
        """Dimension M of the single-excitation sector."""
        return self.n_modes + 4

    @property
    def mode_a2(self) -> int:
        return self.n_modes + 2

    @property
    def spin2(self) -> int:
        return self.n_modes + 3

    @property
    def vacuum(self) -> int:
        return self.n_modes + 4

    @property
    def bath(self) -> slice:
        return slice(2, self.n_modes + 2)

    def bath_index(self, j: int) -> int:
        """Index of Bath(j), j = 1..N."""
        if not 1 <= j <= self.n_modes:
            raise BasisError(f"Bath mode {j} outside 1..{self.n_modes}")
        return j + 1

    def frequencies(self) -> np.ndarray:
        freqs = np.arange(1, self.n_modes + 1) * self.step
        # N * step may round just above the cutoff, where J vanishes
        freqs[-1] = self.cutoff
        return freqs

    def labels(self) -> list[str]:
        bath = [f"bath_{j}" for j in range(1, self.n_modes + 1)]
        return ["spin1", "mode_a1", *bath, "mode_a2", "spin2"]

    def index_of(self, label: str) -> int:
        if label == "vacuum":
            return self.vacuum
        try:
            return self.labels().index(label)
        except ValueError:
            raise BasisError(f"Unknown basis label: {label}") from None

    def mirror_permutation(self) -> np.ndarray:
        """
        Index permutation exchanging subsystems 1 and 2.

        Spins and discrete modes trade places; bath modes keep their index
        because both sides couple to the same frequency grid.
        """
        perm = np.arange(self.dim)
        perm[[self.SPIN1, self.MODE_A1, self.mode_a2, self.spin2]] = [
            self.spin2, self.mode_a2, self.MODE_A1, self.SPIN1]
        return perm


def build_basis(params: ModelParams) -> Basis:
    """
    Build the basis for N = cutoff / step bath modes.

    Raises:
        BasisError: If cutoff / step is not a positive integer
    """
    try:
        n = resolve_mode_count(params.cutoff, params.resolved_step)
    except ValueError as e:
        logger.error(f"Invalid discretization: {e}")
        raise BasisError(str(e)) from e

    return Basis(n_modes=n, step=params.resolved_step, cutoff=params.cutoff)
