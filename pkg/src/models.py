"""
Data models for the straddle STIRAP simulator.

These Pydantic models are the value types shared by every package: the
physical parameters of a run, integrator and time-window settings, the
population partition reported for a state, and the sweep axis/result
tables. They validate themselves on construction and are immutable.

Units follow hbar = 1 throughout. The pulse delay is the one quantity
not given in absolute units: it counts pulse widths.
"""

from math import exp, isfinite, prod
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


# Bath modes used when no discretization step is given (step = cutoff / 200)
DEFAULT_MODE_COUNT = 200

SweepParameter = Literal[
    "peak", "g", "delay", "width", "detuning", "loss", "eta1", "eta2", "step"
]
PulseOrder = Literal["counterintuitive", "intuitive"]


def resolve_mode_count(cutoff: float, step: float) -> int:
    """
    Return N = cutoff / step, insisting that it is a positive integer.

    Raises:
        ValueError: If the ratio is not (numerically) a positive integer
    """
    ratio = cutoff / step
    n = round(ratio)
    if n < 1 or abs(ratio - n) > 1e-9 * max(1.0, ratio):
        raise ValueError(
            f"cutoff/step = {ratio:.10g} must be a positive integer (cutoff={cutoff}, step={step})")
    return int(n)


class SpectralDensity(BaseModel):
    """
    Power-law spectral density J(w) = g * w**eta, zero above the cutoff.
    """
    model_config = ConfigDict(frozen=True)

    g: float = Field(ge=0, description="Amplitude")
    eta: float = Field(gt=0, description="Exponent (<1 sub-ohmic, 1 ohmic, >1 super-ohmic)")
    cutoff: float = Field(gt=0, description="Frequency above which J vanishes")


class PulsePair(BaseModel):
    """
    Gaussian pump/Stokes pulse pair.

    The delay is measured in pulse widths: the peaks are delay * width
    apart in time. In counter-intuitive order the Stokes pulse (spin 2
    side) peaks first, at t = -separation/2, and the pump (spin 1 side) at
    t = +separation/2. The intuitive order swaps the two peak times.
    """
    model_config = ConfigDict(frozen=True)

    peak: float = Field(ge=0)
    width: float = Field(gt=0)
    delay: float = Field(ge=0, description="Peak separation in units of width")
    order: PulseOrder = "counterintuitive"

    @property
    def separation(self) -> float:
        """Time between the two peaks."""
        return self.delay * self.width

    @property
    def pump_center(self) -> float:
        half = self.separation / 2
        return half if self.order == "counterintuitive" else -half

    @property
    def stokes_center(self) -> float:
        return -self.pump_center

    def envelope(self, t: float, center: float) -> float:
        return self.peak * exp(-((t - center) ** 2) / self.width ** 2)


class ModelParams(BaseModel):
    """
    All physical constants of one run; the single source of truth for it.

    Stored flat so that configuration documents and sweep axes can name
    each quantity directly. The spectral densities and the pulse pair are
    derived views.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    detuning: float = Field(default=0.0, description="Common spin/mode frequency (Delta)")
    g: float = Field(default=10.0, ge=0, description="Spectral amplitude")
    g2: Optional[float] = Field(default=None, ge=0, description="Side-2 amplitude, defaults to g")
    eta1: float = Field(default=1.5, gt=0)
    eta2: float = Field(default=1.5, gt=0)
    cutoff: float = Field(default=2.0, gt=0, description="Shared spectral cutoff (omega_c)")
    peak: float = Field(default=2.0, ge=0, description="Pulse peak (Omega)")
    width: float = Field(default=2.0, gt=0, description="Pulse width (T)")
    delay: float = Field(default=1.0, ge=0, description="Pulse delay (tau), in units of width")
    loss: float = Field(default=0.0, ge=0, description="Bath loss rate (gamma)")
    step: Optional[float] = Field(default=None, gt=0, description="Discretization step (delta)")
    pulse_order: PulseOrder = "counterintuitive"

    @model_validator(mode="after")
    def check_mode_count(self) -> "ModelParams":
        resolve_mode_count(self.cutoff, self.resolved_step)
        return self

    @property
    def resolved_step(self) -> float:
        return self.step if self.step is not None else self.cutoff / DEFAULT_MODE_COUNT

    @property
    def n_modes(self) -> int:
        return resolve_mode_count(self.cutoff, self.resolved_step)

    @property
    def spectral1(self) -> SpectralDensity:
        return SpectralDensity(g=self.g, eta=self.eta1, cutoff=self.cutoff)

    @property
    def spectral2(self) -> SpectralDensity:
        g2 = self.g if self.g2 is None else self.g2
        return SpectralDensity(g=g2, eta=self.eta2, cutoff=self.cutoff)

    @property
    def pulses(self) -> PulsePair:
        return PulsePair(peak=self.peak, width=self.width, delay=self.delay, order=self.pulse_order)

    def with_overrides(self, overrides: dict[str, float]) -> "ModelParams":
        """Return a validated copy with the named fields replaced."""
        return ModelParams.model_validate({**self.model_dump(), **overrides})

    def mirrored(self) -> "ModelParams":
        """
        Relabel subsystems 1 <-> 2.

        Swaps the spectral densities and the pulse roles, so that the
        relabelled problem started from spin 2 is the original problem
        with the basis order reversed.
        """
        data = self.model_dump()
        data["eta1"], data["eta2"] = self.eta2, self.eta1
        if self.g2 is not None:
            data["g"], data["g2"] = self.g2, self.g
        data["pulse_order"] = "intuitive" if self.pulse_order == "counterintuitive" else "counterintuitive"
        return ModelParams.model_validate(data)

    @classmethod
    def baseline(cls) -> "ModelParams":
        """g=10, Omega=2, omega_c=2, T=2, tau=1 (one width), Delta=0, eta1=eta2=1.5, gamma=0."""
        return cls()


class IntegratorConfig(BaseModel):
    """Adaptive Runge-Kutta settings and output sampling."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    rtol: float = Field(default=1e-9, gt=0)
    atol: float = Field(default=1e-12, gt=0)
    first_step: Optional[float] = Field(default=None, gt=0)
    max_step: Optional[float] = Field(default=None, gt=0)
    samples: int = Field(default=256, ge=2)
    method: Literal["DOP853", "RK45"] = "DOP853"


class TimeWindow(BaseModel):
    """Finite stand-in for the (-inf, +inf) evolution interval."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    t_start: float
    t_end: float

    @model_validator(mode="after")
    def check_order(self) -> "TimeWindow":
        if not self.t_start < self.t_end:
            raise ValueError(f"t_start ({self.t_start}) must be before t_end ({self.t_end})")
        return self

    @classmethod
    def around_pulses(cls, pulses: PulsePair, widths: float = 5.0) -> "TimeWindow":
        half = pulses.separation / 2 + widths * pulses.width
        return cls(t_start=-half, t_end=half)

    def sample_times(self, samples: int) -> np.ndarray:
        times = np.linspace(self.t_start, self.t_end, samples)
        times[0], times[-1] = self.t_start, self.t_end
        return times


class PopulationPartition(BaseModel):
    """
    Populations of a state grouped by subsystem.

    p_modes sums both discrete modes, p_continuum sums all bath modes and
    p_vacuum is the weight lost from the single-excitation sector.
    """
    model_config = ConfigDict(frozen=True)

    p_spin1: float
    p_spin2: float
    p_modes: float
    p_continuum: float
    p_vacuum: float

    @field_validator('p_spin1', 'p_spin2', 'p_modes', 'p_continuum', 'p_vacuum')
    @classmethod
    def validate_probability(cls, v):
        if not (-1e-10 <= v <= 1 + 1e-10):
            raise ValueError(f'Population {v} is outside [0, 1]')
        return v

    @property
    def total(self) -> float:
        return self.p_spin1 + self.p_spin2 + self.p_modes + self.p_continuum + self.p_vacuum


class SweepAxis(BaseModel):
    """
    One sweep dimension: either linear (minimum, maximum, count) or an
    explicit list of values.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: SweepParameter
    minimum: Optional[float] = None
    maximum: Optional[float] = None
    count: Optional[int] = None
    values: Optional[list[float]] = None

    @model_validator(mode="after")
    def check_spacing(self) -> "SweepAxis":
        if self.values is not None:
            if self.minimum is not None or self.maximum is not None or self.count is not None:
                raise ValueError(f"axis '{self.name}': give either values or minimum/maximum/count")
            if not self.values:
                raise ValueError(f"axis '{self.name}': values must not be empty")
            if len(set(self.values)) != len(self.values):
                raise ValueError(f"axis '{self.name}': values must be distinct")
            return self

        if self.minimum is None or self.maximum is None or self.count is None:
            raise ValueError(f"axis '{self.name}': minimum, maximum and count are required")
        if not self.minimum < self.maximum:
            raise ValueError(f"axis '{self.name}': minimum must be below maximum")
        if self.count < 2:
            raise ValueError(f"axis '{self.name}': count must be at least 2")
        return self

    @property
    def size(self) -> int:
        return len(self.values) if self.values is not None else self.count

    def grid(self) -> np.ndarray:
        if self.values is not None:
            return np.array(self.values, dtype=float)
        return np.linspace(self.minimum, self.maximum, self.count)


class SweepResult(BaseModel):
    """
    Row-major table of final fidelities over a 1D or 2D grid.

    Failed points carry F = nan, converged = False and an error message.
    """
    model_config = ConfigDict(frozen=True)

    base: ModelParams
    axes: list[SweepAxis] = Field(min_length=1, max_length=2)
    fidelities: list[float]
    converged: list[bool]
    errors: list[Optional[str]]
    partitions: Optional[list[Optional[PopulationPartition]]] = None

    @model_validator(mode="after")
    def check_table(self) -> "SweepResult":
        expected = prod(axis.size for axis in self.axes)
        for label, column in (("fidelities", self.fidelities), ("converged", self.converged),
                              ("errors", self.errors)):
            if len(column) != expected:
                raise ValueError(f"{label} has {len(column)} entries, grid has {expected}")
        if self.partitions is not None and len(self.partitions) != expected:
            raise ValueError(f"partitions has {len(self.partitions)} entries, grid has {expected}")
        for f in self.fidelities:
            if isfinite(f) and not (-1e-10 <= f <= 1 + 1e-8):
                raise ValueError(f"fidelity {f} is outside [0, 1]")
        return self

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(axis.size for axis in self.axes)

    @property
    def failed_count(self) -> int:
        return sum(1 for e in self.errors if e is not None)

    def coordinates(self) -> list[tuple[float, ...]]:
        """Grid coordinates in row-major order (last axis fastest)."""
        grids = [axis.grid() for axis in self.axes]
        if len(grids) == 1:
            return [(float(v),) for v in grids[0]]
        return [(float(a), float(b)) for a in grids[0] for b in grids[1]]

    def table(self) -> np.ndarray:
        """Fidelities reshaped to the grid shape."""
        return np.array(self.fidelities, dtype=float).reshape(self.shape)

    def value_at(self, **coords: float) -> float:
        """Fidelity at the grid point whose axis values match ``coords``."""
        names = [axis.name for axis in self.axes]
        for point, f in zip(self.coordinates(), self.fidelities):
            if all(np.isclose(point[names.index(k)], v, rtol=0, atol=1e-9) for k, v in coords.items()):
                return f
        raise KeyError(f"No grid point at {coords}")
