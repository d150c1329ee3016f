"""
eval command

Evaluates one Alpha-Unit quantity for a given alpha. Pointwise quantities
(pdf, cdf, quantile) take their arguments from --at; the others are scalars.
Values are printed one per line with 17 significant digits.

    alpha_unit_cli.py eval --alpha 1.205943 --mean
    alpha_unit_cli.py eval --alpha 0.5 --quantile --at 0.05 0.5 0.95
"""

import argparse
import logging
from typing import Callable, Dict, List

from commands.reports import Report, echo_inputs, format_number, require
from distributions.alpha_unit import (
    AlphaUnitParams,
    au_cdf,
    au_hdi,
    au_kurtosis,
    au_mean,
    au_mgf,
    au_mode,
    au_moment,
    au_pdf,
    au_quantile,
    au_skewness,
    au_variance,
)

logger = logging.getLogger(__name__)

# Quantities evaluated at each --at value
POINTWISE: Dict[str, Callable] = {
    "pdf": au_pdf,
    "cdf": au_cdf,
    "quantile": au_quantile,
}

SCALARS: Dict[str, Callable[[AlphaUnitParams], float]] = {
    "mean": au_mean,
    "variance": au_variance,
    "mode": au_mode,
    "skewness": au_skewness,
    "kurtosis": au_kurtosis,
}


def add_eval_parser(subparsers) -> None:
    parser = subparsers.add_parser("eval", help="evaluate an Alpha-Unit quantity")
    parser.add_argument("--alpha", type=float, required=True, help="AU parameter")

    quantity = parser.add_mutually_exclusive_group(required=True)
    for name in POINTWISE:
        quantity.add_argument(f"--{name}", dest="quantity", action="store_const", const=name)
    for name in SCALARS:
        quantity.add_argument(f"--{name}", dest="quantity", action="store_const", const=name)
    quantity.add_argument("--moment", type=float, metavar="R", help="moment of order R")
    quantity.add_argument("--mgf", type=float, metavar="T", help="moment generating function at T")
    quantity.add_argument("--hdi", type=float, metavar="MASS", help="highest-density interval of this mass")

    parser.add_argument("--at", type=float, nargs="+", help="argument(s) for --pdf, --cdf or --quantile")
    parser.add_argument("--json", action="store_true", help="print a JSON report instead of plain values")


def _evaluate(args: argparse.Namespace, params: AlphaUnitParams) -> Dict[str, object]:
    if args.moment is not None:
        return {"quantity": "moment", "values": [au_moment(args.moment, params)]}
    if args.mgf is not None:
        return {"quantity": "mgf", "values": [au_mgf(args.mgf, params)]}
    if args.hdi is not None:
        interval = au_hdi(args.hdi, params)
        return {"quantity": "hdi", "values": [interval.lower, interval.upper]}
    if args.quantity in POINTWISE:
        require(bool(args.at), f"--{args.quantity} needs --at")
        function = POINTWISE[args.quantity]
        return {"quantity": args.quantity, "at": list(args.at), "values": [function(x, params) for x in args.at]}
    return {"quantity": args.quantity, "values": [SCALARS[args.quantity](params)]}


def handle_eval(args: argparse.Namespace) -> str:
    """
    Execute the eval command.

    Returns:
        One value per line (hdi prints its lower and upper ends), or a JSON report
    """
    params = AlphaUnitParams(alpha=args.alpha)
    result = _evaluate(args, params)
    values: List[float] = [float(v) for v in result["values"]]
    logger.debug(f"eval {result['quantity']} at alpha={args.alpha}: {values}")

    if args.json:
        return Report(command="eval", inputs=echo_inputs(args), results=result).render()
    return "".join(format_number(v) + "\n" for v in values)
