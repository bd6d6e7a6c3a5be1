from .output_format import OutputFormat
from .job_config import JobConfig
from .job_config_validator import JobConfigValidator
from .job_config_schema import JobConfigSchema
from .loader import load_yaml, load_job_config

__all__ = [
    "OutputFormat",
    "JobConfig",
    "JobConfigValidator",
    "JobConfigSchema",
    "load_yaml",
    "load_job_config"
]
