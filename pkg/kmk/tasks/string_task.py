from typing import Optional
from attr import define, field
from kmk.artifacts import SeriesArtifact
from kmk.lie import Weight
from kmk.tasks import BaseTask


@define
class StringTask(BaseTask):
    """t-string function of L(weight) through ``floor``; without a weight, the level-zero string ct(delta_tilde)."""

    order: int = field(kw_only=True)
    weight: Optional[Weight] = field(default=None, kw_only=True)
    floor: Optional[Weight] = field(default=None, kw_only=True)

    def run(self) -> SeriesArtifact:
        engine = self.structure.affine_string_engine

        if self.weight is None:
            return SeriesArtifact(engine.level0_string(self.order), name="level0_string")

        floor = self.weight if self.floor is None else self.floor
        string = engine.t_string(self.weight, floor, self.order)

        return SeriesArtifact(string.series, name="t_string", weight=self.weight, floor=floor)
