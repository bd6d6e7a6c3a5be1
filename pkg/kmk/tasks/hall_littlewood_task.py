from typing import Optional
from attr import define, field
from kmk.artifacts import TableArtifact, TableRow
from kmk.lie import Weight
from kmk.series import Poly
from kmk.tasks import BaseTask


@define
class HallLittlewoodTask(BaseTask):
    """Either the coefficients c_{weight, mu}(t) or the truncated function P_weight(t) itself."""

    weight: Weight = field(kw_only=True)
    depth: int = field(kw_only=True)
    function: bool = field(default=False, kw_only=True)
    t_value: Optional[int] = field(default=None, kw_only=True)

    def run(self) -> TableArtifact:
        engine = self.structure.hall_littlewood_engine

        if self.function:
            series = engine.hl_function(self.weight, self.depth)
            if self.t_value is not None:
                series = series.evaluate_t(self.t_value)
            rows = [
                TableRow(self.weight - self.structure.datum.weight_of(beta), beta.coeffs, value)
                for beta, value in series.items()
            ]
            name = "hl_function"
        else:
            expansion = engine.c_expansion(self.weight, self.depth)
            rows = [
                TableRow(mu, self.structure.datum.offset(self.weight, mu).coeffs, self._specialize(value))
                for mu, value in expansion.items()
            ]
            name = "c_expansion"

        return TableArtifact(rows, name=name, weight=self.weight, depth=self.depth)

    def _specialize(self, value: Poly) -> Poly:
        return value if self.t_value is None else Poly.constant(value.evaluate(self.t_value))
