"""
Base Unit Model

This module provides the abstract base class for every unit-interval family the
model-selection workflow can fit. Each family is responsible for:
1. Evaluating its log-density on (0, 1)
2. Proposing a starting point for the likelihood search from data

The base class handles common functionality like:
- Loading family metadata (parameter names and domains) from families.yaml
- Parameter domain validation
- The unconstrained reparameterization used by the optimizer
  (log for positive parameters, logit for unit-interval parameters)
- Density and log-likelihood evaluation
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, model_validator
from scipy import special as sp

from config.settings import settings
from errors import DomainError

# Configure logging
logger = logging.getLogger(__name__)


class ParamDomain(str, Enum):
    """Open parameter domains and their unconstrained scales."""

    UNIT = "unit"
    POSITIVE = "positive"


class UnitModelSpec(BaseModel):
    """Metadata of one family, as declared in families.yaml."""

    model_config = ConfigDict(frozen=True)

    family: str
    label: str
    name: str
    description: str = ""
    param_names: Tuple[str, ...]
    param_domains: Tuple[ParamDomain, ...]

    @model_validator(mode="after")
    def check_lengths(self) -> "UnitModelSpec":
        """Ensure every parameter has exactly one domain."""
        if len(self.param_names) != len(self.param_domains):
            raise ValueError(
                f"family {self.family}: {len(self.param_names)} names "
                f"but {len(self.param_domains)} domains"
            )
        return self

    @property
    def n_params(self) -> int:
        return len(self.param_names)


@lru_cache(maxsize=None)
def load_family_specs(path: Optional[Path] = None) -> Dict[str, UnitModelSpec]:
    """
    Read families.yaml into UnitModelSpec objects keyed by family id.

    Args:
        path: YAML file (defaults to settings.families_file)

    Returns:
        Mapping of lower-case family id to its spec
    """
    path = Path(path or settings.families_file)
    with path.open(encoding="utf-8") as handle:
        raw = yaml.safe_load(handle)

    specs = {}
    for family_id, entry in raw["families"].items():
        params = entry.get("params", [])
        specs[family_id] = UnitModelSpec(
            family=entry.get("id", family_id),
            label=entry["label"],
            name=entry["name"],
            description=entry.get("description", "").strip(),
            param_names=tuple(p["name"] for p in params),
            param_domains=tuple(ParamDomain(p["domain"]) for p in params),
        )
    logger.debug(f"Loaded {len(specs)} family specs from {path}")
    return specs


class BaseUnitModel(ABC):
    """
    Abstract base class for unit-interval families.

    Each family must implement:
    - log_pdf(): log-density for parameters inside their domains
    - initial_guess(): starting parameters for the likelihood search
    """

    family: str = ""

    def __init__(self, spec: Optional[UnitModelSpec] = None):
        """
        Initialize the model.

        Args:
            spec: Family metadata (looked up in families.yaml by default)
        """
        self.spec = spec or load_family_specs()[self.family]

    @property
    def label(self) -> str:
        return self.spec.label

    @property
    def n_params(self) -> int:
        return self.spec.n_params

    @abstractmethod
    def log_pdf(self, x: np.ndarray, params: np.ndarray) -> np.ndarray:
        """
        Log-density at x in (0, 1).

        Args:
            x: Observations strictly inside the unit interval
            params: Parameter vector inside its domain

        Returns:
            Log-density values, same shape as x
        """
        pass

    @abstractmethod
    def initial_guess(self, x: np.ndarray) -> np.ndarray:
        """
        Starting parameters for the likelihood search.

        Args:
            x: Observations strictly inside the unit interval

        Returns:
            Parameter vector inside its domain
        """
        pass

    def derived_parameters(self, params: np.ndarray) -> Dict[str, float]:
        """Alternative parameterizations reported next to the fitted values."""
        return {}

    # ========================================================================
    # Validation
    # ========================================================================

    def check_params(self, params: Sequence[float]) -> np.ndarray:
        """Return params as an array after checking count and domains."""
        arr = np.asarray(params, dtype=float)
        if arr.shape != (self.n_params,):
            raise DomainError(
                f"{self.label} takes {self.n_params} parameter(s) "
                f"{self.spec.param_names}, got {list(np.atleast_1d(arr))}"
            )
        for name, domain, value in zip(self.spec.param_names, self.spec.param_domains, arr):
            inside = 0.0 < value < 1.0 if domain is ParamDomain.UNIT else 0.0 < value < np.inf
            if not inside:
                raise DomainError(f"{self.label} parameter {name}={value} outside its {domain.value} domain")
        return arr

    @staticmethod
    def check_open_unit(x: Sequence[float]) -> np.ndarray:
        """Return x as an array after checking every value lies in (0, 1)."""
        arr = np.asarray(x, dtype=float)
        if not np.all((arr > 0.0) & (arr < 1.0)):
            raise DomainError("unit-family densities require observations strictly inside (0, 1)")
        return arr

    # ========================================================================
    # Reparameterization
    # ========================================================================

    def to_unconstrained(self, params: Sequence[float]) -> np.ndarray:
        """Map domain parameters to the real line (log or logit)."""
        arr = self.check_params(params)
        return np.array([
            sp.logit(value) if domain is ParamDomain.UNIT else np.log(value)
            for domain, value in zip(self.spec.param_domains, arr)
        ])

    def from_unconstrained(self, theta: Sequence[float]) -> np.ndarray:
        """Inverse of to_unconstrained; always lands strictly inside the domains."""
        return np.array([
            sp.expit(value) if domain is ParamDomain.UNIT else np.exp(value)
            for domain, value in zip(self.spec.param_domains, theta)
        ])

    # ========================================================================
    # Density & Likelihood
    # ========================================================================

    def pdf(self, x: Sequence[float], params: Sequence[float]) -> np.ndarray:
        """Density at x in (0, 1)."""
        return np.exp(self.log_pdf(self.check_open_unit(x), self.check_params(params)))

    def log_likelihood(self, x: Sequence[float], params: Sequence[float]) -> float:
        """Sum of log-densities over the sample."""
        return float(np.sum(self.log_pdf(self.check_open_unit(x), self.check_params(params))))
