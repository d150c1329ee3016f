"""
simulate command

Runs the Monte Carlo study of the MLE and UMVUE over an (alpha, n) grid.

    alpha_unit_cli.py simulate --reps 1000 --seed 7
    alpha_unit_cli.py simulate --alphas 0.1,1.5 --ns 100,500 --format csv
"""

import argparse
import logging

from commands.reports import Report, echo_inputs, frame_to_csv, parse_float_list, parse_int_list
from config.settings import settings
from simulation.monte_carlo import DEFAULT_ALPHAS, DEFAULT_NS, SimConfig, report_frame, simulate

logger = logging.getLogger(__name__)


def add_simulate_parser(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Monte Carlo study of the AU estimators")
    parser.add_argument("--alphas", type=parse_float_list, default=list(DEFAULT_ALPHAS), help="comma-separated alphas")
    parser.add_argument("--ns", type=parse_int_list, default=list(DEFAULT_NS), help="comma-separated sample sizes")
    parser.add_argument("--reps", type=int, default=1000, help="repetitions per cell (default 1000)")
    parser.add_argument("--seed", type=int, default=settings.default_seed, help="master seed")
    parser.add_argument("--conf", type=float, default=settings.default_conf_level, help="interval confidence level")
    parser.add_argument(
        "--workers", type=int, default=settings.simulation_workers, help="worker processes (1 runs serially)"
    )
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="json report or csv table")


def handle_simulate(args: argparse.Namespace) -> str:
    """
    Execute the simulate command.

    Returns:
        JSON report with cells and IQRs, or the cell table as CSV
    """
    config = SimConfig(
        alphas=args.alphas,
        ns=args.ns,
        repetitions=args.reps,
        conf_level=args.conf,
        master_seed=args.seed,
    )
    report = simulate(config, workers=args.workers)

    if args.format == "csv":
        return frame_to_csv(report_frame(report.cells))

    return Report(
        command="simulate",
        inputs=echo_inputs(args),
        results={
            "cells": [cell.model_dump(mode="json") for cell in report.cells],
            "iqr_mle_minus_umvue": {str(n): iqr for n, iqr in report.iqr_by_n.items()},
        },
        seed=args.seed,
    ).render()
