"""
Spectral densities and pulse envelopes.

J(w) = g * w**eta on (0, cutoff] and 0 above the cutoff. The pump and
Stokes couplings are Gaussians of common peak and width, separated by the
pulse delay (counted in pulse widths).
"""

from typing import Union

import numpy as np
from loguru import logger

from ..models import PulsePair, SpectralDensity

Frequency = Union[float, np.ndarray]


class ModelError(ValueError):
    """Custom exception for invalid model construction or evaluation."""
    pass


def eval_spectral_density(sd: SpectralDensity, omega: Frequency) -> Frequency:
    """
    Evaluate J(omega) for a scalar or an array of frequencies.

    Raises:
        ModelError: If any frequency is not strictly positive
    """
    w = np.asarray(omega, dtype=float)
    if np.any(w <= 0):
        error_msg = f"Spectral density is only defined for omega > 0, got {omega}"
        logger.error(error_msg)
        raise ModelError(error_msg)

    values = np.where(w <= sd.cutoff, sd.g * np.power(w, sd.eta), 0.0)
    if values.ndim == 0:
        return float(values)
    return values


def eval_pulses(p: PulsePair, t: float) -> tuple[float, float]:
    """Return (Omega_P(t), Omega_S(t))."""
    return p.envelope(t, p.pump_center), p.envelope(t, p.stokes_center)
