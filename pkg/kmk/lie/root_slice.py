from __future__ import annotations
from typing import Iterator
from attr import define, field
from kmk.lie.root_vector import RootVector


@define(frozen=True)
class RootSlice:
    """Positive roots of height at most `height_bound`, with multiplicities."""

    height_bound: int = field()
    real_roots: tuple[RootVector, ...] = field(factory=tuple)
    imaginary_roots: tuple[RootVector, ...] = field(factory=tuple, kw_only=True)
    imaginary_multiplicity: int = field(default=0, kw_only=True)

    def roots(self) -> Iterator[tuple[RootVector, int]]:
        """Every root with its multiplicity, in increasing height."""
        tagged = [(r, 1) for r in self.real_roots] + [(r, self.imaginary_multiplicity) for r in self.imaginary_roots]

        return iter(sorted(tagged, key=lambda pair: pair[0].sort_key()))

    def multiplicity(self, root: RootVector) -> int:
        if root in self.real_roots:
            return 1
        if root in self.imaginary_roots:
            return self.imaginary_multiplicity

        return 0

    def restrict(self, height_bound: int) -> RootSlice:
        return RootSlice(
            height_bound,
            tuple(r for r in self.real_roots if r.height <= height_bound),
            imaginary_roots=tuple(r for r in self.imaginary_roots if r.height <= height_bound),
            imaginary_multiplicity=self.imaginary_multiplicity
        )

    def __len__(self) -> int:
        return len(self.real_roots) + len(self.imaginary_roots)
