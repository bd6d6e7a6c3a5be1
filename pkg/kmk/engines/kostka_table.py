from attr import define
from kmk.engines import BaseTable


@define(frozen=True)
class KostkaTable(BaseTable):
    """K_{weight, mu}(t) for every dominant mu in the depth cone."""
