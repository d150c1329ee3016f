"""
Probability models: the Bimodal Normal family, the Alpha-Unit distribution and
the unit-interval families it is compared against.
"""

from distributions.alpha_unit import (
    AlphaUnitParams,
    ExponentialFamilyTerms,
    HdiInterval,
    au_cdf,
    au_hdi,
    au_kurtosis,
    au_log_pdf,
    au_mean,
    au_mgf,
    au_mode,
    au_moment,
    au_pdf,
    au_quantile,
    au_skewness,
    au_survival,
    au_variance,
    exponential_family_terms,
)
from distributions.base import BaseUnitModel, ParamDomain, UnitModelSpec, load_family_specs
from distributions.bimodal_normal import (
    BimodalNormal,
    bhn_cdf,
    bhn_pdf,
    bn_cdf,
    bn_log_normalizer,
    bn_modes,
    bn_normalizer,
    bn_pdf,
)
from distributions.unit_families import FAMILY_IDS, FAMILY_MODELS, get_model, unit_pdf

__all__ = [
    "AlphaUnitParams",
    "ExponentialFamilyTerms",
    "HdiInterval",
    "au_cdf",
    "au_hdi",
    "au_kurtosis",
    "au_log_pdf",
    "au_mean",
    "au_mgf",
    "au_mode",
    "au_moment",
    "au_pdf",
    "au_quantile",
    "au_skewness",
    "au_survival",
    "au_variance",
    "exponential_family_terms",
    "BaseUnitModel",
    "ParamDomain",
    "UnitModelSpec",
    "load_family_specs",
    "BimodalNormal",
    "bhn_cdf",
    "bhn_pdf",
    "bn_cdf",
    "bn_log_normalizer",
    "bn_modes",
    "bn_normalizer",
    "bn_pdf",
    "FAMILY_IDS",
    "FAMILY_MODELS",
    "get_model",
    "unit_pdf",
]
