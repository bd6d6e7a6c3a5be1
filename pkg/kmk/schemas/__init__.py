from .base_schema import BaseSchema

from .mismatch_schema import MismatchSchema

from .artifacts.artifact_schema import ArtifactSchema
from .artifacts.error_artifact_schema import ErrorArtifactSchema
from .artifacts.table_artifact_schema import TableRowSchema, TableArtifactSchema
from .artifacts.series_artifact_schema import SeriesArtifactSchema
from .artifacts.check_artifact_schema import CheckArtifactSchema

__all__ = [
    "BaseSchema",

    "MismatchSchema",

    "ArtifactSchema",
    "ErrorArtifactSchema",
    "TableRowSchema",
    "TableArtifactSchema",
    "SeriesArtifactSchema",
    "CheckArtifactSchema"
]
