"""
Thin wrapper around scipy's adaptive Runge-Kutta integrators.

Both propagators go through integrate() so that tolerances, dense output
sampling and failure reporting are handled in one place.
"""

from typing import Callable

import numpy as np
from loguru import logger
from scipy.integrate import solve_ivp

from ..models import IntegratorConfig, TimeWindow


class IntegrationError(Exception):
    """Custom exception for a failed propagation; carries the time reached."""

    def __init__(self, message: str, time: float):
        super().__init__(f"{message} (at t={time:.6g})")
        self.time = time


def integrate(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    y0: np.ndarray,
    window: TimeWindow,
    cfg: IntegratorConfig,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Integrate dy/dt = rhs(t, y) over the window.

    Returns:
        (times, states) with states[k] the solution at times[k]; the first
        row is y0 itself

    Raises:
        IntegrationError: If the integrator stops before t_end
    """
    times = window.sample_times(cfg.samples)

    try:
        sol = solve_ivp(
            rhs,
            (window.t_start, window.t_end),
            y0,
            method=cfg.method,
            t_eval=times,
            rtol=cfg.rtol,
            atol=cfg.atol,
            first_step=cfg.first_step,
            max_step=cfg.max_step if cfg.max_step is not None else np.inf,
        )
    except Exception as e:
        error_msg = f"Integrator raised: {str(e)}"
        logger.error(error_msg)
        raise IntegrationError(error_msg, window.t_start) from e

    if sol.status != 0 or sol.y.shape[1] != len(times):
        reached = float(sol.t[-1]) if len(sol.t) else window.t_start
        error_msg = f"Integration failed: {sol.message}"
        logger.error(f"{error_msg} at t={reached:.6g}")
        raise IntegrationError(error_msg, reached)

    logger.debug(f"Integrated {len(times)} samples with {sol.nfev} RHS evaluations")

    states = np.ascontiguousarray(sol.y.T)
    states[0] = y0
    return times, states
