"""
CLI package for the straddle STIRAP simulator.

Contains run-document parsing, table writers and the command implementations.
"""

from .run_config import RunConfig, RunConfigError, parse_config, serialize_config
from .writers import OutputError, write_table
from .commands import (
    EXIT_CONFIG, EXIT_INTEGRATION, EXIT_OK, EXIT_PARTIAL,
    cmd_evolve, cmd_sweep, cmd_converge, cmd_pulses, cmd_presets,
)

__all__ = [
    'RunConfig',
    'RunConfigError',
    'parse_config',
    'serialize_config',
    'OutputError',
    'write_table',
    'EXIT_OK',
    'EXIT_CONFIG',
    'EXIT_INTEGRATION',
    'EXIT_PARTIAL',
    'cmd_evolve',
    'cmd_sweep',
    'cmd_converge',
    'cmd_pulses',
    'cmd_presets'
]
