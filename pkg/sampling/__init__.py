"""
Seeded random generation for the chi-square(3), BN(1), BHN and Alpha-Unit laws.
"""

from sampling.generators import SampleBatch, sample_au, sample_bhn, sample_bn1, sample_chi2_3
from sampling.streams import RandomStream

__all__ = ["RandomStream", "SampleBatch", "sample_au", "sample_bhn", "sample_bn1", "sample_chi2_3"]
