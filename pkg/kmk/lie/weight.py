from __future__ import annotations
from fractions import Fraction
from typing import Iterable, Union
from attr import define, field

Rational = Union[int, Fraction]


def exact(value: Union[Rational, str]) -> Rational:
    value = Fraction(value)

    return value.numerator if value.denominator == 1 else value


def _exact_tuple(values: Iterable[Rational]) -> tuple[Rational, ...]:
    return tuple(exact(v) for v in values)


@define(frozen=True)
class Weight:
    """Point of h* written as labels <w, alpha_i^vee> plus a delta coefficient (affine only)."""

    labels: tuple[Rational, ...] = field(converter=_exact_tuple)
    delta: Rational = field(default=0, converter=exact)

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, index: int) -> Weight:
        return cls(1 if i == index else 0 for i in range(rank))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self.labels)

    def is_dominant(self) -> bool:
        return self.is_integral() and all(v >= 0 for v in self.labels)

    def is_regular_dominant(self) -> bool:
        return self.is_integral() and all(v >= 1 for v in self.labels)

    def __add__(self, other: Weight) -> Weight:
        return Weight((a + b for a, b in zip(self.labels, other.labels)), self.delta + other.delta)

    def __sub__(self, other: Weight) -> Weight:
        return Weight((a - b for a, b in zip(self.labels, other.labels)), self.delta - other.delta)

    def __neg__(self) -> Weight:
        return Weight((-a for a in self.labels), -self.delta)

    def __mul__(self, scalar: Rational) -> Weight:
        return Weight((a * scalar for a in self.labels), self.delta * scalar)

    __rmul__ = __mul__

    def shift_delta(self, amount: Rational) -> Weight:
        return Weight(self.labels, self.delta + amount)

    def __str__(self) -> str:
        labels = ",".join(str(v) for v in self.labels)

        return f"({labels})" if self.delta == 0 else f"({labels}; {self.delta}d)"
