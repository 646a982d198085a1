"""
Figure presets: base parameters plus sweep axes for each standard study.

Trace presets (fig2*) carry one explicit-value axis whose entries are the
curves of the panel; sweep presets (fig3, fig4*, fig5) carry linear 2D
grids. Linear grids default to 32 points per axis and are laid out so that
the reference values (Omega = 2 and 10, g = 10 and 40,
gamma = 1 and 1.5) are grid points where possible.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..models import ModelParams, SweepAxis

DEFAULT_RESOLUTION = 32


class PresetError(KeyError):
    """Custom exception for an unknown preset name."""
    pass


class FigurePreset(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    description: str
    kind: Literal["trace", "sweep"]
    base: ModelParams
    axes: list[SweepAxis] = Field(default_factory=list, max_length=2)

    def with_resolution(self, count: int) -> "FigurePreset":
        """Copy with every linear axis resampled to ``count`` points."""
        axes = [
            axis if axis.values is not None else axis.model_copy(update={"count": count})
            for axis in self.axes
        ]
        return self.model_copy(update={"axes": axes})


def _linear(name: str, minimum: float, maximum: float) -> SweepAxis:
    return SweepAxis(name=name, minimum=minimum, maximum=maximum, count=DEFAULT_RESOLUTION)


def figure_presets() -> list[FigurePreset]:
    baseline = ModelParams.baseline()
    return [
        FigurePreset(
            name="fig2a",
            description="Pulse envelopes and the baseline time trace",
            kind="trace",
            base=baseline,
        ),
        FigurePreset(
            name="fig2b",
            description="Asymmetric couplings: eta1=1.5, eta2 in {1.5, 1, 0.5}",
            kind="trace",
            base=baseline,
            axes=[SweepAxis(name="eta2", values=[1.5, 1.0, 0.5])],
        ),
        FigurePreset(
            name="fig2c",
            description="Detuning: Delta in {0, 5, 10}",
            kind="trace",
            base=baseline,
            axes=[SweepAxis(name="detuning", values=[0.0, 5.0, 10.0])],
        ),
        FigurePreset(
            name="fig2d",
            description="Dissipation: gamma in {0, 0.5, 1.5}",
            kind="trace",
            base=baseline,
            axes=[SweepAxis(name="loss", values=[0.0, 0.5, 1.5])],
        ),
        FigurePreset(
            name="fig2d_text",
            description="Dissipation, alternate set: gamma in {0, 0.5, 1}",
            kind="trace",
            base=baseline,
            axes=[SweepAxis(name="loss", values=[0.0, 0.5, 1.0])],
        ),
        FigurePreset(
            name="fig3",
            description="F over Omega x g",
            kind="sweep",
            base=baseline,
            axes=[_linear("peak", 0.5, 16.0), _linear("g", 1.25, 40.0)],
        ),
        FigurePreset(
            name="fig3b",
            description="F over g at Omega in {1, 2, 5, 10}",
            kind="sweep",
            base=baseline,
            axes=[SweepAxis(name="peak", values=[1.0, 2.0, 5.0, 10.0]), _linear("g", 1.25, 40.0)],
        ),
        FigurePreset(
            name="fig4a",
            description="F over Omega x tau",
            kind="sweep",
            base=baseline,
            axes=[_linear("peak", 1.0, 10.0), _linear("delay", 0.5, 4.0)],
        ),
        FigurePreset(
            name="fig4b",
            description="F over tau x T at Omega=2",
            kind="sweep",
            base=baseline.with_overrides({"peak": 2.0}),
            axes=[_linear("delay", 0.5, 4.0), _linear("width", 1.0, 5.0)],
        ),
        FigurePreset(
            name="fig5",
            description="F over g x gamma",
            kind="sweep",
            base=baseline,
            axes=[_linear("g", 1.0, 32.0), _linear("loss", 0.0, 1.55)],
        ),
    ]


def get_preset(name: str) -> FigurePreset:
    """
    Look up a preset by name.

    Raises:
        PresetError: If no preset has that name
    """
    for preset in figure_presets():
        if preset.name == name:
            return preset
    known = ", ".join(p.name for p in figure_presets())
    raise PresetError(f"Unknown preset '{name}' (known: {known})")
