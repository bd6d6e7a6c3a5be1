from enum import Enum


class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"
