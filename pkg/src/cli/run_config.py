"""
Run configuration documents.

A run is described by one JSON document validated into a RunConfig. The
physics comes either from a named figure preset or from an explicit
``params`` block, never both. Unknown keys are rejected at every level.
See docs/CONFIG_SCHEMA.md for the full schema.
"""

from typing import Literal, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..config import config
from ..models import IntegratorConfig, ModelParams, PulsePair, SweepAxis, SweepParameter, TimeWindow
from ..sweep.presets import FigurePreset, PresetError, get_preset


class RunConfigError(Exception):
    """Custom exception for unreadable or invalid run documents."""
    pass


class WindowSection(BaseModel):
    """Explicit window, or the default of ``widths`` pulse widths around the pulses."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    t_start: Optional[float] = None
    t_end: Optional[float] = None
    widths: float = Field(default=5.0, gt=0)

    @model_validator(mode="after")
    def check_bounds(self) -> "WindowSection":
        if (self.t_start is None) != (self.t_end is None):
            raise ValueError("t_start and t_end must be given together")
        if self.t_start is not None and not self.t_start < self.t_end:
            raise ValueError("t_start must be before t_end")
        return self

    @property
    def explicit(self) -> Optional[TimeWindow]:
        if self.t_start is None:
            return None
        return TimeWindow(t_start=self.t_start, t_end=self.t_end)

    def resolve(self, pulses: PulsePair) -> TimeWindow:
        return self.explicit or TimeWindow.around_pulses(pulses, self.widths)


class OutputSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    path: str = "stirap_output.csv"
    format: Literal["csv", "json"] = "csv"


class SweepSection(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    axes: list[SweepAxis] = Field(min_length=1, max_length=2)
    workers: Optional[int] = Field(default=None, ge=1)
    record_partition: bool = False


class RunConfig(BaseModel):
    """
    Validated run document with all defaults applied.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    preset: Optional[str] = None
    variant: Optional[float] = Field(default=None, description="Value on a trace preset's axis")
    params: Optional[ModelParams] = None
    overrides: Optional[dict[SweepParameter, float]] = Field(
        default=None, description="Preset base parameters to replace (e.g. a coarser step)")
    resolution: Optional[int] = Field(default=None, ge=2, description="Point count for linear preset axes")
    window: WindowSection = WindowSection()
    integrator: IntegratorConfig = IntegratorConfig()
    propagator: Literal["pure", "lindblad"] = "pure"
    lindblad_cap: int = Field(default_factory=lambda: config.lindblad_cap, ge=1)
    allow_large_lindblad: bool = False
    output: OutputSection = OutputSection()
    sweep: Optional[SweepSection] = None

    @model_validator(mode="after")
    def check_physics_source(self) -> "RunConfig":
        if self.preset is None and self.params is None:
            raise ValueError("Either 'preset' or 'params' must be given")
        if self.preset is not None and self.params is not None:
            raise ValueError("'preset' and 'params' are mutually exclusive")

        if self.preset is not None:
            try:
                preset = get_preset(self.preset)
            except PresetError as e:
                raise ValueError(str(e.args[0])) from None
            if self.sweep is not None:
                raise ValueError("A preset defines its own axes; 'sweep' needs explicit 'params'")
            if self.overrides:
                try:
                    preset.base.with_overrides(self.overrides)
                except ValueError as e:
                    raise ValueError(f"overrides do not give valid parameters: {e}") from None
            if self.variant is not None:
                if preset.kind != "trace" or not preset.axes:
                    raise ValueError(f"Preset '{preset.name}' has no trace variants")
                if not any(abs(v - self.variant) <= 1e-12 for v in preset.axes[0].grid()):
                    raise ValueError(f"variant {self.variant} is not on preset axis {preset.axes[0].values}")
        else:
            if self.variant is not None:
                raise ValueError("'variant' requires a trace preset")
            if self.resolution is not None:
                raise ValueError("'resolution' only applies to presets")
            if self.overrides is not None:
                raise ValueError("'overrides' only applies to presets; edit 'params' instead")

        if self.propagator == "lindblad" and not self.allow_large_lindblad:
            n = self.physics().n_modes
            if n > self.lindblad_cap:
                raise ValueError(
                    f"Lindblad propagator limited to {self.lindblad_cap} bath modes (N={n}); "
                    "set allow_large_lindblad to override")
        return self

    def figure_preset(self) -> Optional[FigurePreset]:
        if self.preset is None:
            return None
        preset = get_preset(self.preset)
        return preset.with_resolution(self.resolution) if self.resolution else preset

    def physics(self) -> ModelParams:
        """Base parameters of the run."""
        if self.params is not None:
            return self.params
        base = get_preset(self.preset).base
        return base.with_overrides(self.overrides) if self.overrides else base

    def sweep_axes(self) -> list[SweepAxis]:
        if self.sweep is not None:
            return list(self.sweep.axes)
        preset = self.figure_preset()
        return list(preset.axes) if preset is not None else []

    def trace_variants(self) -> list[tuple[str, ModelParams]]:
        """
        (suffix, params) for each time trace this document asks for.

        Explicit params and axis-free presets give a single unsuffixed run.
        """
        base = self.physics()
        preset = self.figure_preset()
        if preset is None or preset.kind != "trace" or not preset.axes:
            return [("", base)]

        axis = preset.axes[0]
        values = [float(v) for v in axis.grid()]
        if self.variant is not None:
            values = [v for v in values if abs(v - self.variant) <= 1e-12]
            return [("", base.with_overrides({axis.name: values[0]}))]
        return [(f"_{axis.name}={v!r}", base.with_overrides({axis.name: v})) for v in values]


def parse_config(text: str) -> RunConfig:
    """
    Parse and validate a JSON run document.

    A blank document is read as ``{}``.

    Raises:
        RunConfigError: On syntax errors (with line/column) or invalid fields
    """
    if not text.strip():
        text = "{}"
    try:
        return RunConfig.model_validate_json(text)
    except ValidationError as e:
        error_msg = f"Invalid run configuration: {e}"
        logger.error(error_msg)
        raise RunConfigError(error_msg) from e


def serialize_config(cfg: RunConfig) -> str:
    """JSON text that parse_config reads back to an equal RunConfig."""
    return cfg.model_dump_json(indent=2)
