"""
Deterministic 1D/2D parameter sweep engine.

This module runs the figure-level studies:
- Expands the axes into a row-major list of grid points
- Overrides the base parameters at each point
- Propagates each point with the pure-state propagator
- Records the final fidelity, a convergence flag and any per-point error
- Optionally fans the points out to a process pool

Results are placed into a preallocated table by grid index, so the output
never depends on which worker finished first.
"""

from concurrent.futures import ProcessPoolExecutor, as_completed
from datetime import datetime
from itertools import product
from math import isfinite, nan
from typing import Any, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..dynamics.pure import evolve_pure
from ..model.hamiltonian import build_hamiltonian
from ..models import IntegratorConfig, ModelParams, PopulationPartition, SweepAxis, SweepResult, TimeWindow
from ..observables.populations import ObservableError, final_fidelity, population_partition


class SweepError(Exception):
    """Custom exception for sweep configuration errors."""
    pass


class PointJob(BaseModel):
    """Everything one worker needs to evaluate one grid point."""
    model_config = ConfigDict(frozen=True)

    index: int
    base: ModelParams
    overrides: dict[str, float]
    widths: float
    window: Optional[TimeWindow]
    integrator: IntegratorConfig
    record_partition: bool


class PointOutcome(BaseModel):
    index: int
    fidelity: float = nan
    converged: bool = False
    error: Optional[str] = None
    partition: Optional[PopulationPartition] = None


def assess_point(fidelity: float, norm: float) -> tuple[bool, Optional[str]]:
    """
    Convergence flag and error message for a finished point.

    A fidelity outside [0, 1 + 1e-8] is an error; the point is then
    reported as failed (F = nan) instead of entering the table.
    """
    if not isfinite(fidelity) or not -1e-10 <= fidelity <= 1 + 1e-8:
        return False, f"fidelity {fidelity!r} outside [0, 1]"
    return norm <= 1 + 1e-8, None


def run_point(job: PointJob) -> PointOutcome:
    """Evaluate one grid point; never raises, failures are reported in the outcome."""
    try:
        params = job.base.with_overrides(job.overrides)
    except ValueError as e:
        return PointOutcome(index=job.index, error=f"invalid parameters {job.overrides}: {e}")

    try:
        system = build_hamiltonian(params)
        window = job.window or TimeWindow.around_pulses(params.pulses, job.widths)
        traj = evolve_pure(system, window, job.integrator)
    except Exception as e:
        return PointOutcome(index=job.index, error=f"{type(e).__name__}: {e}")

    fidelity = final_fidelity(traj)
    converged, error = assess_point(fidelity, float(traj.norms[-1]))
    if error is not None:
        return PointOutcome(index=job.index, error=error)

    try:
        partition = population_partition(traj, traj.t_end) if job.record_partition else None
    except ObservableError as e:
        return PointOutcome(index=job.index, error=f"ObservableError: {e}")

    return PointOutcome(index=job.index, fidelity=fidelity, converged=converged, partition=partition)


class SweepService:
    """
    Service class for running a parameter sweep.

    This class handles:
    1. Validating the axes
    2. Building the row-major job list
    3. Serial or pooled execution
    4. Assembling the SweepResult and statistics
    """

    def __init__(
        self,
        base: ModelParams,
        axes: list[SweepAxis],
        window: Optional[TimeWindow] = None,
        integrator: Optional[IntegratorConfig] = None,
        workers: int = 1,
        widths: float = 5.0,
        record_partition: bool = False,
    ):
        """
        Initialize the sweep.

        Args:
            base: Parameters shared by every point
            axes: One or two axes over distinct parameters
            window: Fixed window for all points; None recomputes it per point
            integrator: Integrator settings
            workers: Worker processes (1 = serial reference mode)
            widths: Pulse widths on each side of the pulses for per-point windows

        Raises:
            SweepError: If the axes are invalid
        """
        if not 1 <= len(axes) <= 2:
            raise SweepError(f"A sweep needs one or two axes, got {len(axes)}")
        names = [axis.name for axis in axes]
        if len(set(names)) != len(names):
            raise SweepError(f"Sweep axes must name distinct parameters, got {names}")
        if workers < 1:
            raise SweepError(f"Worker count must be at least 1, got {workers}")

        self.base = base
        self.axes = list(axes)
        self.window = window
        self.integrator = integrator or IntegratorConfig()
        self.workers = workers
        self.widths = widths
        self.record_partition = record_partition

        # Statistics tracking
        self.stats: dict[str, Any] = {
            "sweep_start_time": None,
            "sweep_end_time": None,
            "points_total": 0,
            "points_succeeded": 0,
            "points_failed": 0,
            "points_unconverged": 0,
            "sweep_duration_seconds": 0,
        }

    def grid_points(self) -> list[dict[str, float]]:
        """Parameter overrides for every grid point, row-major (last axis fastest)."""
        names = [axis.name for axis in self.axes]
        grids = [[float(v) for v in axis.grid()] for axis in self.axes]
        return [dict(zip(names, values)) for values in product(*grids)]

    def _jobs(self) -> list[PointJob]:
        return [
            PointJob(
                index=i,
                base=self.base,
                overrides=overrides,
                widths=self.widths,
                window=self.window,
                integrator=self.integrator,
                record_partition=self.record_partition,
            )
            for i, overrides in enumerate(self.grid_points())
        ]

    def run(self) -> SweepResult:
        """Run every grid point and return the assembled table."""
        jobs = self._jobs()
        self.stats["points_total"] = len(jobs)
        self.stats["sweep_start_time"] = datetime.now()

        axis_desc = " x ".join(f"{a.name}[{a.size}]" for a in self.axes)
        logger.info(f"🚀 Starting sweep over {axis_desc} ({len(jobs)} points, {self.workers} worker(s))")

        outcomes: list[Optional[PointOutcome]] = [None] * len(jobs)
        try:
            if self.workers == 1:
                for job in jobs:
                    outcomes[job.index] = run_point(job)
            else:
                with ProcessPoolExecutor(max_workers=self.workers) as executor:
                    futures = [executor.submit(run_point, job) for job in jobs]
                    for future in as_completed(futures):
                        outcome = future.result()
                        outcomes[outcome.index] = outcome
        finally:
            self.stats["sweep_end_time"] = datetime.now()
            duration = self.stats["sweep_end_time"] - self.stats["sweep_start_time"]
            self.stats["sweep_duration_seconds"] = duration.total_seconds()

        for outcome in outcomes:
            if outcome.error is not None:
                logger.warning(f"Grid point {outcome.index} failed: {outcome.error}")

        result = SweepResult(
            base=self.base,
            axes=self.axes,
            fidelities=[o.fidelity for o in outcomes],
            converged=[o.converged for o in outcomes],
            errors=[o.error for o in outcomes],
            partitions=[o.partition for o in outcomes] if self.record_partition else None,
        )

        self.stats["points_failed"] = result.failed_count
        self.stats["points_succeeded"] = len(jobs) - result.failed_count
        self.stats["points_unconverged"] = sum(
            1 for o in outcomes if o.error is None and not o.converged)

        if result.failed_count:
            logger.warning(f"⚠️ Sweep finished with {result.failed_count}/{len(jobs)} failed points")
        else:
            logger.success(f"✅ Sweep completed: {len(jobs)} points in {self.stats['sweep_duration_seconds']:.1f}s")
        return result

    def print_summary(self) -> None:
        """Print a short summary of the sweep."""
        print("\n" + "=" * 60)
        print("SWEEP SUMMARY")
        print("=" * 60)
        print(f"  Axes: {', '.join(a.name for a in self.axes)}")
        print(f"  Points: {self.stats['points_total']}")
        print(f"  Succeeded: {self.stats['points_succeeded']}")
        print(f"  Failed: {self.stats['points_failed']}")
        print(f"  Not converged: {self.stats['points_unconverged']}")
        print(f"  Duration: {self.stats['sweep_duration_seconds']:.1f} seconds")
        print("=" * 60)


# Convenience function for simple usage
def run_sweep(
    base: ModelParams,
    axes: list[SweepAxis],
    window: Optional[TimeWindow] = None,
    cfg: Optional[IntegratorConfig] = None,
    workers: int = 1,
    widths: float = 5.0,
    record_partition: bool = False,
) -> SweepResult:
    """
    Run a sweep and return its result table.

    Raises:
        SweepError: If the axes are invalid
    """
    service = SweepService(
        base, axes, window=window, integrator=cfg, workers=workers,
        widths=widths, record_partition=record_partition)
    return service.run()
