from __future__ import annotations
from typing import Optional
import yaml
from marshmallow import ValidationError
from kmk.config import JobConfig, JobConfigSchema, JobConfigValidator
from kmk.errors import ConfigError


def load_yaml(path: str) -> dict:
    try:
        with open(path, "r") as yaml_file:
            data = yaml.safe_load(yaml_file) or {}
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot read config file {path}: {e}")

    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a mapping")

    return {key.replace("-", "_"): value for key, value in data.items()}


def load_job_config(arguments: dict, config_path: Optional[str] = None) -> JobConfig:
    """Merge command-line arguments over an optional YAML file and build a validated JobConfig."""
    raw = load_yaml(config_path) if config_path else {}
    raw.update({key: value for key, value in arguments.items() if value is not None})
    normalized = JobConfigValidator().validate(raw)

    try:
        return JobConfigSchema().load(normalized)
    except ValidationError as e:
        raise ConfigError(str(e.messages))
