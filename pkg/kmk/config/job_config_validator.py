from __future__ import annotations
import re
from typing import Any
from schema import And, Optional, Or, Schema, SchemaError, Use
from kmk.errors import ConfigError
from kmk.tasks import VerifyTask

LABELS = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def _labels(value: Any) -> list[int]:
    if isinstance(value, str):
        if not LABELS.match(value):
            raise ValueError(f"malformed weight {value!r}: expected comma-separated integers")
        return [int(v) for v in value.split(",")]
    if isinstance(value, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        return value

    raise ValueError(f"malformed weight {value!r}")


def _matrix(value: Any) -> list[list[int]]:
    if isinstance(value, str):
        return [_labels(row) for row in value.split(";")]
    if isinstance(value, list):
        return [_labels(row) for row in value]

    raise ValueError(f"malformed Cartan matrix {value!r}")


def _checks(value: Any) -> list[str]:
    names = [value] if isinstance(value, str) else value

    if not isinstance(names, list) or not names or any(name not in VerifyTask.CHECKS for name in names):
        raise ValueError(f"unknown check in {value!r}")

    return names


class JobConfigValidator:
    """Normalizes and type-checks a raw configuration mapping before it becomes a JobConfig."""

    def validate(self, raw: dict) -> dict:
        try:
            return self.schema().validate({k: v for k, v in raw.items() if v is not None})
        except SchemaError as e:
            raise ConfigError(str(e.code))

    def schema(self) -> Schema:
        natural = And(int, lambda n: n >= 0, error="expected a nonnegative integer")

        return Schema({
            "command": Or("kostka", "hl", "string", "verify"),
            Optional("algebra"): And(str, len),
            Optional("matrix"): Use(_matrix, error="malformed Cartan matrix"),
            Optional("kind"): Or("finite", "untwisted_affine"),
            Optional("checks"): Use(_checks, error="unknown check"),
            Optional("weight"): Use(_labels, error="malformed weight: expected comma-separated integers"),
            Optional("delta"): int,
            Optional("floor"): Use(_labels, error="malformed floor weight: expected comma-separated integers"),
            Optional("floor_delta"): int,
            Optional("depth"): natural,
            Optional("order"): natural,
            Optional("t_degree"): natural,
            Optional("t_value"): int,
            Optional("level"): And(int, lambda n: n >= 1, error="the level must be positive"),
            Optional("extra_radius"): natural,
            Optional("function"): bool,
            Optional("output_format"): Or("json", "csv", "latex"),
            Optional("parallel"): bool,
            Optional("verbose"): bool,
            Optional("memory_guard_mb"): natural
        })
