"""
Verify Reference Values

This script recomputes the published anchor values of the Alpha-Unit model
and checks each against its tolerance:

- HDI control limits for alpha = 0.1092 at pi = 0.01
- Mean for alpha = 1.205943
- Variance alpha^2 / (6n) of the fitted inflation alpha (n = 30)
- Delta-method interval lengths of the simulation table
- Closed-form moments against adaptive quadrature

Exits with status 1 when any check fails.
"""

import logging
import math
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import numpy as np
from scipy import integrate

from distributions.alpha_unit import AlphaUnitParams, au_hdi, au_mean, au_moment, au_pdf
from inference.estimators import delta_ci, fisher_information

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def check(name, value, expected, tolerance):
    """Log one comparison and return whether it passed."""
    passed = abs(value - expected) <= tolerance
    status = "ok" if passed else "FAILED"
    logger.info(f"  [{status:>6}] {name}: {value:.7g} (expected {expected} +/- {tolerance:g})")
    return passed


def moment_by_quadrature(r, alpha):
    """E[X^r] integrated over the pieces [exp(-alpha(k+1)), exp(-alpha k)]."""
    params = AlphaUnitParams(alpha=alpha)
    total = 0.0
    for k in range(40):
        lo, hi = math.exp(-alpha * (k + 1)), math.exp(-alpha * k)
        piece, _ = integrate.quad(lambda x: x ** r * au_pdf(x, params), lo, hi, epsabs=0.0, epsrel=1e-12, limit=200)
        total += piece
    return total


def verify_anchor_values():
    logger.info("=" * 70)
    logger.info("Anchor Values")
    logger.info("=" * 70)
    results = []

    hdi = au_hdi(0.99, AlphaUnitParams(alpha=0.1092))
    results.append(check("HDI LCL (alpha=0.1092, pi=0.01)", hdi.lower, 0.6856, 0.002))
    results.append(check("HDI UCL (alpha=0.1092, pi=0.01)", hdi.upper, 0.9773, 0.002))
    results.append(check("mean (alpha=1.205943)", au_mean(AlphaUnitParams(alpha=1.205943)), 0.1948, 0.001))
    results.append(check("variance alpha^2/(6n), n=30", 1.0 / fisher_information(1.205943, 30), 0.008079, 1e-6))

    for alpha_hat, n, expected in [(0.0998, 100, 0.0160), (1.4999, 500, 0.1073)]:
        lo, hi = delta_ci(alpha_hat, n, 0.95)
        results.append(check(f"delta CI length (alpha={alpha_hat}, n={n})", hi - lo, expected, 5e-4))
    return results


def verify_moments():
    logger.info("=" * 70)
    logger.info("Closed-Form Moments vs Quadrature")
    logger.info("=" * 70)
    results = []
    for alpha in (0.1, 0.5, 1.0, 2.0):
        for r in range(1, 9):
            closed = au_moment(r, AlphaUnitParams(alpha=alpha))
            numeric = moment_by_quadrature(r, alpha)
            results.append(check(f"E[X^{r}] (alpha={alpha})", closed, numeric, 1e-8 * abs(numeric)))
    extreme = au_moment(1000.0, AlphaUnitParams(alpha=1.0))
    results.append(bool(np.isfinite(extreme) and extreme > 0.0))
    logger.info(f"  E[X^1000] (alpha=1) = {extreme:.6g}")
    return results


def main():
    """Main entry point."""
    logger.info("Alpha-Unit Toolkit - Reference Value Verification")
    results = verify_anchor_values() + verify_moments()

    failed = results.count(False)
    logger.info("=" * 70)
    logger.info(f"{len(results) - failed}/{len(results)} checks passed")
    logger.info("=" * 70)
    if failed:
        sys.exit(1)


if __name__ == "__main__":
    main()
