"""
Full density-matrix propagator on the sector plus the vacuum.

Solves d(rho)/dt = -i[H(t), rho] + gamma * sum_j (2 b_j rho b_j^+ - {b_j^+ b_j, rho})
with b_j = |vacuum><Bath(j)|. The dissipator is written with jump
operators L_j = sqrt(2 * gamma) * b_j and applied as a sparse
superoperator on the row-major flattened density matrix. It does not use
the sector reduction, which is what makes it a check on evolve_pure.
"""

from typing import Optional

import numpy as np
import scipy.sparse as sp
from loguru import logger

from ..model.hamiltonian import HamiltonianSystem
from ..model.spectral import eval_pulses
from ..models import IntegratorConfig, TimeWindow
from .integrator import integrate
from .trajectory import StateTrajectory, initial_state

# Tolerances of the density-matrix run relative to the configured ones;
# keeps sampled eigenvalues of rho above -1e-10 at the defaults
ORACLE_TOLERANCE_FACTOR = 1e-2


def jump_operators(sys: HamiltonianSystem) -> list[sp.csr_matrix]:
    """L_j = sqrt(2 * loss_j) |vacuum><j| for every lossy state."""
    d = sys.dim + 1
    vacuum = sys.basis.vacuum
    ops = []
    for k in np.flatnonzero(sys.loss):
        ops.append(sp.csr_matrix(([np.sqrt(2 * sys.loss[k])], ([vacuum], [k])), shape=(d, d)))
    return ops


def lindblad_dissipator(sys: HamiltonianSystem) -> sp.csr_matrix:
    """
    Superoperator of the dissipator acting on row-major vec(rho).

    Uses vec(A rho B) = kron(A, B^T) vec(rho).
    """
    d = sys.dim + 1
    eye = sp.identity(d, dtype=complex, format="csr")
    superop = sp.csr_matrix((d * d, d * d), dtype=complex)
    for op in jump_operators(sys):
        rate = (op.conj().T @ op).tocsr()
        superop = superop + sp.kron(op, op.conj()) - 0.5 * sp.kron(rate, eye) - 0.5 * sp.kron(eye, rate.T)
    return superop.tocsr()


def evolve_lindblad(
    sys: HamiltonianSystem,
    window: TimeWindow,
    cfg: IntegratorConfig,
    initial: Optional[np.ndarray] = None,
) -> StateTrajectory:
    """
    Integrate the master equation from rho = |psi><psi|.

    Args:
        sys: Built Hamiltonian system
        window: Integration interval
        cfg: Integrator settings (tolerances scaled by ORACLE_TOLERANCE_FACTOR)
        initial: Sector amplitudes of the initial pure state (defaults to Spin1)

    Raises:
        IntegrationError: If the integrator fails
    """
    d = sys.dim + 1
    psi = initial_state(sys.basis) if initial is None else np.array(initial, dtype=complex)
    if psi.shape != (sys.dim,):
        raise ValueError(f"Initial state has shape {psi.shape}, expected ({sys.dim},)")
    psi = np.append(psi, 0.0)
    rho0 = np.outer(psi, psi.conj()).ravel()

    h_static = np.zeros((d, d), dtype=complex)
    h_static[:sys.dim, :sys.dim] = sys.static
    dissipator = lindblad_dissipator(sys)
    pulses = sys.pulses
    pi, pj = sys.pump_slot
    si, sj = sys.stokes_slot

    def rhs(t: float, y: np.ndarray) -> np.ndarray:
        pump, stokes = eval_pulses(pulses, t)
        h = h_static.copy()
        h[pi, pj] = h[pj, pi] = pump
        h[si, sj] = h[sj, si] = stokes
        rho = y.reshape(d, d)
        out = -1j * (h @ rho - rho @ h)
        return out.ravel() + dissipator @ y

    logger.debug(f"Lindblad propagation: dim={d}, jumps={len(jump_operators(sys))}")
    oracle_cfg = cfg.model_copy(update={
        "rtol": cfg.rtol * ORACLE_TOLERANCE_FACTOR,
        "atol": cfg.atol * ORACLE_TOLERANCE_FACTOR,
    })
    times, states = integrate(rhs, rho0, window, oracle_cfg)

    return StateTrajectory(
        kind="lindblad",
        basis=sys.basis,
        times=times,
        densities=states.reshape(len(times), d, d),
    )
