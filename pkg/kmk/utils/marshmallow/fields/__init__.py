from .poly import PolyField
from .weight import WeightField
from .q_series import QSeriesField


__all__ = [
    "PolyField",
    "WeightField",
    "QSeriesField"
]
