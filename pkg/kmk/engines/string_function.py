from attr import define, field
from kmk.lie import Weight
from kmk.series import QSeries


@define(frozen=True)
class StringFunction:
    """sum_k K_{weight, floor - k delta}(t) q^k truncated after q^order."""

    weight: Weight = field(kw_only=True)
    floor: Weight = field(kw_only=True)
    series: QSeries = field(kw_only=True)

    @property
    def order(self) -> int:
        return self.series.order

    def at_one(self) -> QSeries:
        return self.series.evaluate_t(1)
