"""
fit command

Fits the Alpha-Unit model (closed-form MLE or UMVUE with Wald and delta-method
intervals) and ranks the requested competitor families by AIC and BIC.

    alpha_unit_cli.py fit --data inflation.csv --column rate --minmax
    alpha_unit_cli.py fit --data humidity.csv --models au,kum,uhn --format csv
"""

import argparse
import logging
from pathlib import Path
from typing import Optional, Union

from commands.reports import Report, echo_inputs, frame_to_csv, parse_column
from config.settings import settings
from datasets.csv_loader import ingest_csv
from datasets.unit_sample import UnitSample, minmax_transform, squeeze_boundary, to_unit_sample
from distributions.unit_families import FAMILY_IDS
from errors import BoundaryLikelihoodError
from inference.estimators import EstimationMethod, fit_alpha_unit
from inference.model_selection import compare_models, comparison_frame

logger = logging.getLogger(__name__)


def load_unit_sample(
    path: Path,
    column: Union[str, int],
    minmax: bool,
    squeeze: Optional[bool],
) -> UnitSample:
    """
    Read a CSV column and bring it onto the unit interval.

    Min-max always produces an exact 0 and 1, so with --minmax the squeeze is
    on unless --no-squeeze is given. Otherwise it is applied only on request.
    """
    values = ingest_csv(path, column)
    if minmax:
        squeeze = True if squeeze is None else squeeze
        return minmax_transform(values, squeeze=squeeze, source=str(path))
    sample = to_unit_sample(values, source=str(path))
    return squeeze_boundary(sample) if squeeze else sample


def add_fit_parser(subparsers) -> None:
    parser = subparsers.add_parser("fit", help="fit AU and compare unit families by AIC/BIC")
    parser.add_argument("--data", type=Path, required=True, help="CSV file")
    parser.add_argument("--column", type=parse_column, default=0, help="header name or 0-based index (default 0)")
    parser.add_argument(
        "--models",
        default=",".join(FAMILY_IDS),
        help=f"comma-separated families (default {','.join(FAMILY_IDS)})",
    )
    parser.add_argument("--minmax", action="store_true", help="min-max standardize the column first")
    parser.add_argument(
        "--squeeze",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="move values off 0 and 1 via (y(n-1)+0.5)/n (default: on with --minmax)",
    )
    parser.add_argument("--conf", type=float, default=settings.default_conf_level, help="confidence level")
    parser.add_argument(
        "--method",
        choices=[m.value.lower() for m in EstimationMethod],
        default="mle",
        help="AU point estimator (default mle)",
    )
    parser.add_argument("--format", choices=["json", "csv"], default="json", help="json report or csv ranking")


def handle_fit(args: argparse.Namespace) -> str:
    """
    Execute the fit command.

    Returns:
        JSON report, or the ranking as CSV with --format csv
    """
    sample = load_unit_sample(args.data, args.column, args.minmax, args.squeeze)
    if sample.has_zero or sample.has_one:
        raise BoundaryLikelihoodError(
            f"{args.data} contains values equal to 0 or 1, where likelihoods are undefined; "
            f"re-run with --squeeze"
        )

    au_fit = fit_alpha_unit(sample, EstimationMethod(args.method.upper()), args.conf)
    families = [family for family in args.models.split(",") if family.strip()]
    ranking = compare_models(sample, families)
    logger.info(f"Best family by AIC: {ranking[0].family}")

    if args.format == "csv":
        return frame_to_csv(comparison_frame(ranking))

    return Report(
        command="fit",
        inputs=echo_inputs(args),
        results={
            "sample": {"n": sample.n, "squeezed": sample.squeezed, "source": sample.source},
            "alpha_unit": au_fit.model_dump(mode="json"),
            "ranking": [fit.model_dump(mode="json") for fit in ranking],
        },
    ).render()
