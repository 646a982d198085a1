#!/usr/bin/env python3
"""
Straddle STIRAP simulator - Main Entry Point

Usage:
    python main.py evolve CONFIG.json      # Time traces (F1, F2, partitions)
    python main.py sweep CONFIG.json       # 1D/2D parameter sweep of final F
    python main.py converge CONFIG.json    # step and window convergence report
    python main.py pulses CONFIG.json      # pulse envelopes over the window
    python main.py presets                 # List figure presets
    python main.py --help                  # Show this help

Exit codes: 0 success, 1 configuration error, 2 integration error,
3 partial sweep failure.
"""

import argparse
import sys
from pathlib import Path

from loguru import logger

# Add src to Python path
sys.path.append(str(Path(__file__).parent))

from src.config import config  # noqa: E402
from src.cli.commands import (  # noqa: E402
    EXIT_CONFIG, cmd_converge, cmd_evolve, cmd_presets, cmd_pulses, cmd_sweep,
)
from src.cli.run_config import RunConfig, RunConfigError, parse_config  # noqa: E402

COMMANDS = {
    "evolve": cmd_evolve,
    "sweep": cmd_sweep,
    "converge": cmd_converge,
    "pulses": cmd_pulses,
}


def configure_logging() -> None:
    logger.remove()  # Remove default handler
    logger.add(
        sys.stderr,
        format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>",
        level=config.log_level
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Straddle STIRAP population transfer through a dissipative continuum",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("config", help="Run document (JSON)")
        cmd.add_argument("-o", "--output", help="Override output.path")
        cmd.add_argument("--format", choices=["csv", "json"], help="Override output.format")
        if name == "sweep":
            cmd.add_argument("-w", "--workers", type=int, help="Override sweep worker count")

    sub.add_parser("presets")
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    """Read the run document and apply command-line overrides."""
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as e:
        raise RunConfigError(f"Cannot read {args.config}: {e}") from e

    cfg = parse_config(text)

    output = {}
    if args.output:
        output["path"] = args.output
    if args.format:
        output["format"] = args.format
    if output:
        cfg = cfg.model_copy(update={"output": cfg.output.model_copy(update=output)})

    workers = getattr(args, "workers", None)
    if workers is not None:
        if workers < 1:
            raise RunConfigError(f"--workers must be at least 1, got {workers}")
        if cfg.sweep is not None:
            cfg = cfg.model_copy(update={"sweep": cfg.sweep.model_copy(update={"workers": workers})})
        else:
            config.workers = workers
    return cfg


def main(argv: list[str] | None = None) -> int:
    """Main entry point."""
    configure_logging()
    args = build_parser().parse_args(argv)

    if args.command == "presets":
        return cmd_presets()

    try:
        cfg = load_config(args)
    except RunConfigError as e:
        logger.error(f"❌ {e}")
        return EXIT_CONFIG

    logger.info(f"🚀 Running '{args.command}' ({cfg.preset or 'explicit params'}, {cfg.propagator} propagator)")
    return COMMANDS[args.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
