"""
Run Simulation Study Script

This script runs the Monte Carlo study of the Alpha-Unit MLE and UMVUE over the
full (alpha, n) grid, logs a summary per sample size and writes the cell table.
Use this to regenerate the bias/MSE/interval-length table after changes to the
sampling or estimation code.

Usage:
    python scripts/run_simulation_study.py --out study.csv
    python scripts/run_simulation_study.py --reps 200 --workers 4 --seed 7
"""

import argparse
import logging
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from commands.reports import frame_to_csv
from config.settings import settings
from simulation.monte_carlo import SimConfig, report_frame, simulate

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def log_summary(report):
    """Log the cells of each sample size and the IQR of MLE - UMVUE."""
    frame = report_frame(report.cells)
    for n, block in frame.groupby("n", sort=False):
        logger.info("=" * 70)
        logger.info(f"n = {n}   (IQR of MLE - UMVUE: {report.iqr_by_n[n]:.3g})")
        logger.info("=" * 70)
        for row in block.itertuples(index=False):
            length = f"{row.ci_length:.4f}" if row.method == "MLE" else "      "
            logger.info(
                f"  alpha={row.alpha:<5} {row.method:<5} avg={row.avg_estimate:.4f} "
                f"bias={row.bias:+.2e} mse={row.mse:.2e} ci={length}"
            )


def main():
    """Main entry point."""
    parser = argparse.ArgumentParser(
        description='Monte Carlo study of the Alpha-Unit estimators'
    )
    parser.add_argument(
        '--reps',
        type=int,
        default=1000,
        help='Repetitions per (alpha, n) cell (default: 1000)'
    )
    parser.add_argument(
        '--seed',
        type=int,
        default=settings.default_seed,
        help=f'Master seed (default: {settings.default_seed})'
    )
    parser.add_argument(
        '--workers',
        type=int,
        default=settings.simulation_workers,
        help='Worker processes (default: settings.simulation_workers)'
    )
    parser.add_argument(
        '--out',
        type=Path,
        default=None,
        help='Write the cell table to this CSV file'
    )

    args = parser.parse_args()

    logger.info("Alpha-Unit Toolkit - Simulation Study")
    logger.info(f"Repetitions: {args.reps}, seed: {args.seed}, workers: {args.workers}")

    try:
        config = SimConfig(repetitions=args.reps, master_seed=args.seed)
        report = simulate(config, workers=args.workers)
        log_summary(report)

        if args.out:
            args.out.write_text(frame_to_csv(report_frame(report.cells)), encoding="utf-8")
            logger.info(f"Wrote {len(report.cells)} rows to {args.out}")

        logger.info("Simulation study completed successfully!")

    except KeyboardInterrupt:
        logger.warning("Simulation study interrupted by user")
        sys.exit(1)
    except Exception as e:
        logger.error(f"Simulation study failed: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
