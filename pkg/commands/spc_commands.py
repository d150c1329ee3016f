"""
spc command

Computes AU control limits, either for a given in-control alpha or for the
MLE fitted to a data column, and optionally evaluates that column against them.

    alpha_unit_cli.py spc --alpha 0.1092 --pi 0.01 --method hdi
    alpha_unit_cli.py spc --data humidity.csv --column rh --fit --out chart.csv
"""

import argparse
import logging
from pathlib import Path

from commands.fit_commands import load_unit_sample
from commands.reports import Report, echo_inputs, frame_to_csv, parse_column, require
from config.settings import settings
from inference.estimators import mle_alpha
from spc.control_chart import ChartMethod, ChartSpec, chart_frame, control_limits, evaluate_series

logger = logging.getLogger(__name__)


def add_spc_parser(subparsers) -> None:
    parser = subparsers.add_parser("spc", help="AU control chart limits and alarms")
    parser.add_argument("--data", type=Path, help="CSV file with the monitored series")
    parser.add_argument("--column", type=parse_column, default=0, help="header name or 0-based index (default 0)")
    parser.add_argument("--minmax", action="store_true", help="min-max standardize the column first")
    parser.add_argument(
        "--squeeze",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="move values off 0 and 1 via (y(n-1)+0.5)/n (default: on with --minmax)",
    )

    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--alpha", type=float, help="in-control alpha")
    source.add_argument("--fit", action="store_true", help="use the MLE of alpha from --data")

    parser.add_argument("--pi", type=float, default=settings.default_false_alarm, help="false-alarm probability")
    parser.add_argument(
        "--method",
        choices=[m.value for m in ChartMethod],
        default=ChartMethod.HDI.value,
        help="hdi (default) or tails (equal-tailed)",
    )
    parser.add_argument("--out", type=Path, help="write chart rows (index, value, alarm) to this CSV")


def handle_spc(args: argparse.Namespace) -> str:
    """
    Execute the spc command.

    Returns:
        JSON report with the limits and, when data are given, the evaluation
    """
    require(args.data is not None or not args.fit, "--fit needs --data")
    require(args.data is not None or args.out is None, "--out needs --data")

    sample = None
    if args.data is not None:
        sample = load_unit_sample(args.data, args.column, args.minmax, args.squeeze)

    alpha = mle_alpha(sample) if args.fit else args.alpha
    spec = ChartSpec(alpha=alpha, false_alarm=args.pi, method=ChartMethod(args.method))
    limits = control_limits(spec)

    evaluation = None
    if sample is not None:
        evaluation = evaluate_series(sample.values, limits)
        if args.out is not None:
            args.out.write_text(frame_to_csv(chart_frame(sample.values, limits)), encoding="utf-8")
            logger.info(f"Wrote {sample.n} chart rows to {args.out}")

    return Report(
        command="spc",
        inputs=echo_inputs(args),
        results={
            "alpha": alpha,
            "alpha_source": "fit" if args.fit else "given",
            "limits": limits.model_dump(mode="json"),
            "evaluation": evaluation.model_dump(mode="json") if evaluation else None,
        },
    ).render()
