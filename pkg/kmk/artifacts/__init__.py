from .base_artifact import BaseArtifact
from .error_artifact import ErrorArtifact
from .table_artifact import TableArtifact, TableRow
from .series_artifact import SeriesArtifact
from .check_artifact import CheckArtifact


__all__ = [
    "BaseArtifact",
    "ErrorArtifact",
    "TableArtifact",
    "TableRow",
    "SeriesArtifact",
    "CheckArtifact"
]
