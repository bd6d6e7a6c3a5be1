from __future__ import annotations
from typing import Iterable
from attr import define, field


def _integers(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(v) for v in values)


@define(frozen=True)
class RootVector:
    """Element of the root lattice in simple-root coordinates."""

    coeffs: tuple[int, ...] = field(converter=_integers)

    @classmethod
    def zero(cls, rank: int) -> RootVector:
        return cls((0,) * rank)

    @classmethod
    def simple(cls, rank: int, index: int) -> RootVector:
        return cls(1 if i == index else 0 for i in range(rank))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_positive(self) -> bool:
        return self.is_nonnegative() and any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: RootVector) -> RootVector:
        return RootVector(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: RootVector) -> RootVector:
        return RootVector(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> RootVector:
        return RootVector(-a for a in self.coeffs)

    def __mul__(self, scalar: int) -> RootVector:
        return RootVector(a * scalar for a in self.coeffs)

    __rmul__ = __mul__

    def sort_key(self) -> tuple:
        return self.height, self.coeffs

    def to_list(self) -> list[int]:
        return list(self.coeffs)
