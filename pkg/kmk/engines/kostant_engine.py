from __future__ import annotations
import threading
from typing import Optional
from attr import define, field
from kmk.engines import BaseEngine
from kmk.errors import HeightBoundExceededError
from kmk.lie import RootSlice, RootVector
from kmk.series import FormalSeries, Poly, negative_binomial


@define
class KostantEngine(BaseEngine):
    """t-analog of the Kostant partition function.

    The generating series prod (1 - t e^{-alpha})^{-m_alpha} is built one root at a
    time in increasing height and memoized at the largest depth requested so far.
    """

    _series: Optional[FormalSeries] = field(default=None, init=False)
    _lock: threading.Lock = field(factory=threading.Lock, init=False)

    def generating_series(self, depth: int, root_slice: Optional[RootSlice] = None) -> FormalSeries:
        if root_slice is not None:
            if depth > root_slice.height_bound:
                raise HeightBoundExceededError(f"depth {depth} exceeds the root slice bound {root_slice.height_bound}")

            return self._build(root_slice.restrict(depth))

        with self._lock:
            if self._series is None or self._series.depth < depth:
                self.logger.debug("building partition table for %s at depth %d", self.datum.label, depth)
                self._series = self._build(self.datum.roots_up_to(depth))
            series = self._series

        return series if series.depth == depth else series.truncate(depth)

    def t_partition(self, gamma: RootVector, root_slice: Optional[RootSlice] = None) -> Poly:
        if root_slice is not None and gamma.height > root_slice.height_bound:
            raise HeightBoundExceededError(f"height {gamma.height} exceeds the root slice bound {root_slice.height_bound}")
        if not gamma.is_nonnegative():
            return Poly.zero()

        return self.generating_series(gamma.height, root_slice).coefficient(gamma)

    def t_partition_table(self, depth: int, root_slice: Optional[RootSlice] = None) -> dict[RootVector, Poly]:
        return dict(self.generating_series(depth, root_slice).items())

    def _build(self, root_slice: RootSlice) -> FormalSeries:
        series = FormalSeries.one(self.datum, root_slice.height_bound)

        for root, multiplicity in root_slice.roots():
            series = series.multiply_root_series(
                root, negative_binomial(multiplicity, series.depth // root.height)
            )

        return series
