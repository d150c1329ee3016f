"""
Alpha-Unit Toolkit - Configuration Settings

This module loads configuration from environment variables using Pydantic Settings.
It provides type-safe access to all configuration values and validates them on startup.

Key Features:
- Type-safe configuration with validation
- Automatic loading from .env file
- Every field is optional; defaults reproduce the published study settings
- Environment variables use the ALPHA_UNIT_ prefix (e.g. ALPHA_UNIT_DEFAULT_SEED)
"""

from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    All settings can be overridden by environment variables.
    The .env file is automatically loaded if present.
    """

    # ========================================================================
    # Application Configuration
    # ========================================================================
    environment: str = Field(
        default="development",
        description="Environment: development, staging, or production"
    )

    log_level: str = Field(
        default="INFO",
        description="Logging level: DEBUG, INFO, WARNING, ERROR, CRITICAL"
    )

    tool_version: str = Field(
        default="1.0.0",
        description="Version label embedded in every JSON report"
    )

    # ========================================================================
    # Reproducibility
    # ========================================================================
    default_seed: int = Field(
        default=20240501,
        ge=0,
        description="Master seed used when --seed is not given"
    )

    # ========================================================================
    # Inference & Control Chart Defaults
    # ========================================================================
    default_conf_level: float = Field(
        default=0.95,
        gt=0.0,
        lt=1.0,
        description="Confidence level for Wald and delta-method intervals"
    )

    default_false_alarm: float = Field(
        default=0.01,
        gt=0.0,
        lt=1.0,
        description="False-alarm probability of control charts"
    )

    # ========================================================================
    # Numerical Configuration
    # ========================================================================
    root_abs_tol: float = Field(
        default=1e-12,
        gt=0.0,
        description="Absolute tolerance of the bracketed root finder"
    )

    root_max_iter: int = Field(
        default=200,
        ge=1,
        description="Iteration limit of the bracketed root finder"
    )

    fit_max_iter: int = Field(
        default=5000,
        ge=10,
        description="Iteration limit of the Nelder-Mead likelihood search"
    )

    fit_restarts: int = Field(
        default=3,
        ge=1,
        description="Attempts (from perturbed starts) before a fit is reported as not converged"
    )

    simulation_workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes for Monte Carlo cells (1 runs serially)"
    )

    # ========================================================================
    # Metadata Files
    # ========================================================================
    families_file: Path = Field(
        default=Path(__file__).parent / "families.yaml",
        description="YAML file describing the unit-distribution families"
    )

    # ========================================================================
    # Model Configuration
    # ========================================================================
    model_config = SettingsConfigDict(
        env_prefix="ALPHA_UNIT_",
        env_file=".env",  # Load from .env file
        env_file_encoding="utf-8",
        case_sensitive=False,  # Allow case-insensitive env vars
        extra="ignore"  # Ignore extra env vars
    )

    # ========================================================================
    # Validators
    # ========================================================================
    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Ensure log level is valid."""
        allowed = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        v_upper = v.upper()
        if v_upper not in allowed:
            raise ValueError(f"log_level must be one of {allowed}")
        return v_upper

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        """Ensure environment is valid."""
        allowed = ["development", "staging", "production"]
        v_lower = v.lower()
        if v_lower not in allowed:
            raise ValueError(f"environment must be one of {allowed}")
        return v_lower


# ============================================================================
# Global Settings Instance
# ============================================================================
# Imported throughout the toolkit; instantiated once and reused everywhere

try:
    settings = Settings()
except Exception as e:
    print(f"Error loading configuration: {e}")
    print("Check the ALPHA_UNIT_* environment variables and your .env file")
    raise


# ============================================================================
# Helper function for debugging
# ============================================================================
def print_settings() -> None:
    """Print current settings (useful for debugging)."""
    print("\n" + "=" * 70)
    print("🔧 Alpha-Unit Toolkit Configuration")
    print("=" * 70)
    print(f"Environment:        {settings.environment}")
    print(f"Log Level:          {settings.log_level}")
    print(f"Tool Version:       {settings.tool_version}")
    print(f"Default Seed:       {settings.default_seed}")
    print(f"Confidence Level:   {settings.default_conf_level}")
    print(f"False Alarm Rate:   {settings.default_false_alarm}")
    print(f"Root Tolerance:     {settings.root_abs_tol} ({settings.root_max_iter} iterations)")
    print(f"Fit Iterations:     {settings.fit_max_iter} x {settings.fit_restarts} attempts")
    print(f"Simulation Workers: {settings.simulation_workers}")
    print(f"Families File:      {settings.families_file}")
    print("=" * 70 + "\n")


if __name__ == "__main__":
    print_settings()
