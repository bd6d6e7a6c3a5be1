from __future__ import annotations
from attr import define, field
from kmk.artifacts import BaseArtifact
from kmk.lie import Weight
from kmk.series import Poly


@define(frozen=True)
class TableRow:
    weight: Weight = field()
    offset: tuple[int, ...] = field(converter=tuple)
    value: Poly = field()


@define(frozen=True)
class TableArtifact(BaseArtifact):
    """Rows of polynomials indexed by dominant weights below ``weight``."""

    value: list[TableRow] = field()
    name: str = field(kw_only=True)
    weight: Weight = field(kw_only=True)
    depth: int = field(kw_only=True)

    def value_at(self, weight: Weight) -> Poly:
        return next((row.value for row in self.value if row.weight == weight), Poly.zero())

    def to_text(self) -> str:
        return "\n".join(f"{row.weight}\t{row.value}" for row in self.value)

    def to_dict(self) -> dict:
        from kmk.schemas import TableArtifactSchema

        return dict(TableArtifactSchema().dump(self))
