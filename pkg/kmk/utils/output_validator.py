from __future__ import annotations
import jsonschema
from attr import define, field

SCHEMA_VERSION = "1"

POLY = {"type": "array", "items": {"type": "integer"}}
NUMBER = {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+/\d+$"}]}
WEIGHT = {
    "type": "object",
    "properties": {
        "labels": {"type": "array", "items": NUMBER},
        "delta": NUMBER
    },
    "required": ["labels"]
}
NULLABLE_WEIGHT = {"anyOf": [WEIGHT, {"type": "null"}]}

TABLE_ARTIFACT = {
    "type": "object",
    "properties": {
        "type": {"const": "TableArtifact"},
        "name": {"type": "string"},
        "weight": WEIGHT,
        "depth": {"type": "integer", "minimum": 0},
        "value": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "weight": WEIGHT,
                    "offset": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                    "value": POLY
                },
                "required": ["weight", "offset", "value"]
            }
        }
    },
    "required": ["type", "name", "weight", "depth", "value"]
}
SERIES_ARTIFACT = {
    "type": "object",
    "properties": {
        "type": {"const": "SeriesArtifact"},
        "name": {"type": "string"},
        "weight": NULLABLE_WEIGHT,
        "floor": NULLABLE_WEIGHT,
        "value": {"type": "array", "items": POLY, "minItems": 1}
    },
    "required": ["type", "name", "value"]
}
CHECK_ARTIFACT = {
    "type": "object",
    "properties": {
        "type": {"const": "CheckArtifact"},
        "name": {"type": "string"},
        "value": {"type": "boolean"},
        "details": {"type": "object"},
        "mismatch": {
            "anyOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "properties": {
                        "expected": POLY,
                        "actual": POLY,
                        "q_order": {"type": ["integer", "null"]},
                        "offset": {"type": ["array", "null"], "items": {"type": "integer"}},
                        "t_degree": {"type": ["integer", "null"]},
                        "label": {"type": ["string", "null"]}
                    },
                    "required": ["expected", "actual"]
                }
            ]
        }
    },
    "required": ["type", "name", "value"]
}
ERROR_ARTIFACT = {
    "type": "object",
    "properties": {
        "type": {"const": "ErrorArtifact"},
        "value": {"type": "string"},
        "exit_code": {"type": "integer"}
    },
    "required": ["type", "value"]
}

OUTPUT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "algebra": {"type": "string"},
        "command": {"enum": ["kostka", "hl", "string", "verify"]},
        "results": {
            "type": "array",
            "items": {"anyOf": [TABLE_ARTIFACT, SERIES_ARTIFACT, CHECK_ARTIFACT, ERROR_ARTIFACT]}
        }
    },
    "required": ["schema_version", "algebra", "command", "results"],
    "additionalProperties": False
}


@define(frozen=True)
class OutputValidator:
    """Checks a CLI output document against the versioned JSON schema."""

    schema: dict = field(default=OUTPUT_SCHEMA, kw_only=True)

    def validate(self, document: dict) -> dict:
        jsonschema.validate(document, self.schema)

        return document

    def is_valid(self, document: dict) -> bool:
        return jsonschema.Draft202012Validator(self.schema).is_valid(document)
