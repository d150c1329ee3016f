"""
Numerical kernels: special functions and bracketed root finding.
"""

from numerics.roots import Bracket, Tolerance, default_tolerance, find_root
from numerics.special import (
    chi_square_cdf,
    log_gamma,
    scaled_normal_tail,
    std_normal_cdf,
    std_normal_logpdf,
    std_normal_pdf,
    std_normal_quantile,
)

__all__ = [
    "Bracket",
    "Tolerance",
    "default_tolerance",
    "find_root",
    "chi_square_cdf",
    "log_gamma",
    "scaled_normal_tail",
    "std_normal_cdf",
    "std_normal_logpdf",
    "std_normal_pdf",
    "std_normal_quantile",
]
