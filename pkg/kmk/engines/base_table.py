from __future__ import annotations
from abc import ABC
from attr import define, field
from kmk.lie import Weight
from kmk.series import Poly


def _nonzero(entries: dict[Weight, Poly]) -> dict[Weight, Poly]:
    return {mu: value for mu, value in entries.items() if not value.is_zero()}


@define(frozen=True)
class BaseTable(ABC):
    """Polynomials indexed by dominant weights mu <= weight in the depth cone; absent means zero."""

    weight: Weight = field(kw_only=True)
    depth: int = field(kw_only=True)
    entries: dict[Weight, Poly] = field(factory=dict, converter=_nonzero, kw_only=True)

    @entries.validator
    def validate_entries(self, _, entries: dict[Weight, Poly]) -> None:
        if entries.get(self.weight) != Poly.one():
            raise ValueError(f"the entry at {self.weight} must be 1")

    def __getitem__(self, mu: Weight) -> Poly:
        return self.entries.get(mu, Poly.zero())

    def __contains__(self, mu: Weight) -> bool:
        return mu in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def items(self) -> list[tuple[Weight, Poly]]:
        return list(self.entries.items())
