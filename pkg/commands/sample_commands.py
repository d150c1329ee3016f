"""
sample command

Draws a seeded batch from AU(alpha) (or an intermediate stage of the
generation pipeline) and prints it as a one-column CSV.

    alpha_unit_cli.py sample --alpha 0.5 --n 3 --seed 42
"""

import argparse
import logging

import pandas as pd

from commands.reports import Report, echo_inputs, frame_to_csv, require
from config.settings import settings
from distributions.alpha_unit import AlphaUnitParams
from sampling.generators import sample_au, sample_bhn, sample_bn1, sample_chi2_3
from sampling.streams import RandomStream

logger = logging.getLogger(__name__)

DISTRIBUTIONS = ("au", "bhn", "bn1", "chi2")


def add_sample_parser(subparsers) -> None:
    parser = subparsers.add_parser("sample", help="draw seeded samples")
    parser.add_argument("--alpha", type=float, help="AU/BHN parameter (required for au and bhn)")
    parser.add_argument("--n", type=int, required=True, help="number of draws")
    parser.add_argument("--seed", type=int, default=settings.default_seed, help="master seed")
    parser.add_argument("--stream-id", type=int, default=0, help="stream id under the seed (default 0)")
    parser.add_argument("--dist", choices=DISTRIBUTIONS, default="au", help="distribution (default au)")
    parser.add_argument("--format", choices=["csv", "json"], default="csv", help="output format")


def handle_sample(args: argparse.Namespace) -> str:
    """
    Execute the sample command.

    Returns:
        CSV with a single "value" column, or a JSON report
    """
    stream = RandomStream(args.seed, args.stream_id)
    require(args.dist not in ("au", "bhn") or args.alpha is not None, f"--alpha is required for --dist {args.dist}")

    if args.dist == "au":
        batch = sample_au(AlphaUnitParams(alpha=args.alpha), stream, args.n)
    elif args.dist == "bhn":
        batch = sample_bhn(AlphaUnitParams(alpha=args.alpha).alpha, stream, args.n)
    elif args.dist == "bn1":
        batch = sample_bn1(stream, args.n)
    else:
        batch = sample_chi2_3(stream, args.n)
    logger.info(f"Sampled {batch.n} {batch.distribution_tag} values from {stream}")

    if args.format == "csv":
        return frame_to_csv(pd.DataFrame({"value": batch.values}))

    return Report(
        command="sample",
        inputs=echo_inputs(args),
        results={
            "distribution": batch.distribution_tag,
            "params": batch.params,
            "values": [float(v) for v in batch.values],
        },
        seed=args.seed,
    ).render()
