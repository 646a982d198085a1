"""
Sweep package for the straddle STIRAP simulator.

Contains the figure presets and the deterministic parameter sweep engine.
"""

from .presets import FigurePreset, PresetError, figure_presets, get_preset
from .engine import SweepError, SweepService, run_sweep

__all__ = [
    'FigurePreset',
    'PresetError',
    'figure_presets',
    'get_preset',
    'SweepError',
    'SweepService',
    'run_sweep'
]
