from attr import define
from kmk.engines import BaseTable


@define(frozen=True)
class HLExpansion(BaseTable):
    """Coefficients c_{weight, mu}(t) of P_weight in the basis of irreducible characters."""
