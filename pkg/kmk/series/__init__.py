from kmk.series.poly import Poly
from kmk.series.q_series import QSeries, pochhammer, negative_binomial, delta_ratio
from kmk.series.formal_series import FormalSeries, fs_mul, fs_invertible_inverse, constant_term

__all__ = [
    "Poly",
    "QSeries",
    "pochhammer",
    "negative_binomial",
    "delta_ratio",
    "FormalSeries",
    "fs_mul",
    "fs_invertible_inverse",
    "constant_term"
]
