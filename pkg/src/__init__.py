"""Straddle STIRAP simulator: population transfer between two spins through a dissipative bosonic continuum."""

__version__ = "0.1.0"
