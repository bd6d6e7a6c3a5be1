from .paths import abs_path
from .j2 import J2
from .futures import execute_futures_dict
from .output_validator import OutputValidator, OUTPUT_SCHEMA, SCHEMA_VERSION


__all__ = [
    "abs_path",
    "J2",
    "execute_futures_dict",
    "OutputValidator",
    "OUTPUT_SCHEMA",
    "SCHEMA_VERSION"
]
