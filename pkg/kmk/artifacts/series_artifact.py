from typing import Optional
from attr import define, field
from kmk.artifacts import BaseArtifact
from kmk.lie import Weight
from kmk.series import QSeries


@define(frozen=True)
class SeriesArtifact(BaseArtifact):
    value: QSeries = field()
    name: str = field(kw_only=True)
    weight: Optional[Weight] = field(default=None, kw_only=True)
    floor: Optional[Weight] = field(default=None, kw_only=True)

    @property
    def order(self) -> int:
        return self.value.order

    def to_text(self) -> str:
        return str(self.value)

    def to_dict(self) -> dict:
        from kmk.schemas import SeriesArtifactSchema

        return dict(SeriesArtifactSchema().dump(self))
