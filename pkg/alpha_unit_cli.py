#!/usr/bin/env python3
"""
Alpha-Unit Toolkit Command Line

Fits, samples, evaluates, simulates and charts the Alpha-Unit distribution.

The CLI:
1. Parses a subcommand and its options
2. Dispatches to the matching handler in COMMAND_HANDLERS
3. Writes the handler's output (JSON or CSV) to stdout
4. Maps failures to exit codes: 1 usage, 2 data, 3 numerical non-convergence

Usage:
    python alpha_unit_cli.py eval --alpha 1.205943 --mean
    python alpha_unit_cli.py spc --alpha 0.1092 --pi 0.01 --method hdi

Configuration:
    Set ALPHA_UNIT_* environment variables or a .env file, e.g.
    - ALPHA_UNIT_DEFAULT_SEED: seed used when --seed is absent
    - ALPHA_UNIT_LOG_LEVEL: logging level (logs go to stderr)
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from commands.eval_commands import add_eval_parser, handle_eval
from commands.fit_commands import add_fit_parser, handle_fit
from commands.sample_commands import add_sample_parser, handle_sample
from commands.simulate_commands import add_simulate_parser, handle_simulate
from commands.spc_commands import add_spc_parser, handle_spc
from config.settings import settings
from errors import AlphaUnitError, UsageError

logger = logging.getLogger(__name__)


# ============================================================================
# Command Registry
# ============================================================================

COMMAND_HANDLERS: Dict[str, Callable[[argparse.Namespace], str]] = {
    "fit": handle_fit,
    "sample": handle_sample,
    "eval": handle_eval,
    "simulate": handle_simulate,
    "spc": handle_spc,
}

PARSER_BUILDERS = (add_fit_parser, add_sample_parser, add_eval_parser, add_simulate_parser, add_spc_parser)


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> CliParser:
    parser = CliParser(prog="alpha_unit_cli.py", description="Alpha-Unit distribution toolkit")
    parser.add_argument("--log-level", default=None, help=f"logging level (default {settings.log_level})")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=CliParser)
    for add_parser in PARSER_BUILDERS:
        add_parser(subparsers)
    return parser


def configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


# ============================================================================
# Entry Point
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one CLI invocation.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.log_level)
        handler = COMMAND_HANDLERS[args.command]
        output = handler(args)
    except AlphaUnitError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        logger.error(f"Invalid value: {e}")
        print(f"error: invalid value: {e}", file=sys.stderr)
        return UsageError.exit_code

    sys.stdout.write(output)
    logger.debug(f"Command {args.command} finished")
    return 0


if __name__ == "__main__":
    sys.exit(main())
