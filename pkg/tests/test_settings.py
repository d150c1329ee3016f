"""
Tests for configuration and family metadata.
"""

import pytest
from pydantic import ValidationError

from config.settings import Settings, settings
from distributions.base import ParamDomain, load_family_specs


def test_defaults():
    defaults = Settings(_env_file=None)
    assert defaults.default_conf_level == 0.95
    assert defaults.default_false_alarm == 0.01
    assert defaults.root_abs_tol == 1e-12
    assert defaults.fit_restarts == 3
    assert defaults.families_file.name == "families.yaml"


def test_environment_override(monkeypatch):
    monkeypatch.setenv("ALPHA_UNIT_DEFAULT_SEED", "99")
    monkeypatch.setenv("alpha_unit_log_level", "debug")
    overridden = Settings(_env_file=None)
    assert overridden.default_seed == 99
    assert overridden.log_level == "DEBUG"


@pytest.mark.parametrize("variable, value", [("ALPHA_UNIT_LOG_LEVEL", "LOUD"), ("ALPHA_UNIT_ENVIRONMENT", "qa")])
def test_invalid_values(monkeypatch, variable, value):
    monkeypatch.setenv(variable, value)
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_environment_is_a_plain_validated_field(monkeypatch):
    monkeypatch.setenv("ALPHA_UNIT_ENVIRONMENT", "Production")
    assert Settings(_env_file=None).environment == "production"
    assert not any(isinstance(value, property) for value in vars(Settings).values())


def test_family_specs():
    specs = load_family_specs(settings.families_file)
    assert set(specs) == {"au", "be", "kum", "logitno", "simplex", "uhn", "ulindley"}
    assert specs["be"].param_names == ("mu", "sigma")
    assert specs["be"].param_domains == (ParamDomain.UNIT, ParamDomain.UNIT)
    assert specs["kum"].param_domains == (ParamDomain.POSITIVE, ParamDomain.POSITIVE)
    assert specs["ulindley"].n_params == 1
    assert all(spec.label == spec.family.upper() for spec in specs.values())
