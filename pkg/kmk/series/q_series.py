from __future__ import annotations
from math import comb
from typing import Callable, Iterable, Union
from attr import define, field
from kmk.errors import NotInvertibleError
from kmk.series.poly import Poly


@define(frozen=True)
class QSeries:
    """Power series in q = e^{-delta} with Poly coefficients, truncated after q^order."""

    order: int = field()
    coefficients: tuple[Poly, ...] = field()

    @order.validator
    def validate_order(self, _, order: int) -> None:
        if order < 0:
            raise ValueError("order must be nonnegative")

    @coefficients.validator
    def validate_coefficients(self, _, coefficients: tuple[Poly, ...]) -> None:
        if len(coefficients) != self.order + 1:
            raise ValueError("a series of order N carries exactly N+1 coefficients")

    @classmethod
    def from_coefficients(cls, order: int, coefficients: Iterable[Union[Poly, int]]) -> QSeries:
        values = [c if isinstance(c, Poly) else Poly.constant(c) for c in coefficients][:order + 1]
        values += [Poly.zero()] * (order + 1 - len(values))

        return cls(order, tuple(values))

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls.from_coefficients(order, [])

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.from_coefficients(order, [Poly.one()])

    @classmethod
    def monomial(cls, power: int, coefficient: Poly, order: int) -> QSeries:
        values = [Poly.zero()] * (order + 1)

        if power <= order:
            values[power] = coefficient

        return cls(order, tuple(values))

    def coefficient(self, power: int) -> Poly:
        return self.coefficients[power] if 0 <= power <= self.order else Poly.zero()

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")

        return QSeries(order, self.coefficients[:order + 1])

    def map_coefficients(self, function: Callable[[Poly], Poly]) -> QSeries:
        return QSeries(self.order, tuple(function(c) for c in self.coefficients))

    def evaluate_t(self, value: int) -> QSeries:
        return self.map_coefficients(lambda c: Poly.constant(c.evaluate(value)))

    def truncate_t(self, max_degree: int) -> QSeries:
        return self.map_coefficients(lambda c: c.truncate(max_degree))

    def inverse(self) -> QSeries:
        head = self.coefficients[0]

        if not head.is_constant() or head.constant_term not in (1, -1):
            raise NotInvertibleError(f"constant coefficient {head} is not a unit")

        unit = head.constant_term
        inverse = [Poly.constant(unit)]

        for n in range(1, self.order + 1):
            total = Poly.zero()
            for k in range(1, n + 1):
                total = total + self.coefficients[k] * inverse[n - k]
            inverse.append(total * (-unit))

        return QSeries(self.order, tuple(inverse))

    def _common(self, other: QSeries) -> int:
        return min(self.order, other.order)

    def __neg__(self) -> QSeries:
        return self.map_coefficients(lambda c: -c)

    def __add__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented

        order = self._common(other)

        return QSeries(order, tuple(self.coefficient(k) + other.coefficient(k) for k in range(order + 1)))

    def __sub__(self, other: QSeries) -> QSeries:
        if not isinstance(other, QSeries):
            return NotImplemented

        return self + (-other)

    def __mul__(self, other: Union[QSeries, Poly, int]) -> QSeries:
        if isinstance(other, (Poly, int)):
            return self.map_coefficients(lambda c: c * other)
        if not isinstance(other, QSeries):
            return NotImplemented

        order = self._common(other)
        product = [Poly.zero()] * (order + 1)

        for i in range(order + 1):
            a = self.coefficients[i]
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other.coefficients[j]
                if not b.is_zero():
                    product[i + j] = product[i + j] + a * b

        return QSeries(order, tuple(product))

    __rmul__ = __mul__

    def __truediv__(self, other: QSeries) -> QSeries:
        return self * other.inverse()

    def __pow__(self, exponent: int) -> QSeries:
        if exponent < 0:
            return self.inverse() ** (-exponent)

        result = QSeries.one(self.order)

        for _ in range(exponent):
            result = result * self

        return result

    def to_lists(self) -> list[list[int]]:
        return [c.to_list() for c in self.coefficients]

    def __str__(self) -> str:
        terms = []

        for k, c in enumerate(self.coefficients):
            if c.is_zero():
                continue
            body = str(c) if k == 0 else f"({c})*q^{k}"
            terms.append(body)

        return (" + ".join(terms) or "0") + f" + O(q^{self.order + 1})"


def pochhammer(t_power: int, order: int) -> QSeries:
    """(t^a q; q)_infinity = prod_{n >= 1} (1 - t^a q^n), truncated after q^order."""
    if t_power < 0:
        raise ValueError("t_power must be nonnegative")

    values = [Poly.one()] + [Poly.zero()] * order
    factor = Poly.monomial(t_power)

    for n in range(1, order + 1):
        for k in range(order, n - 1, -1):
            if not values[k - n].is_zero():
                values[k] = values[k] - factor * values[k - n]

    return QSeries(order, tuple(values))


def negative_binomial(multiplicity: int, order: int) -> QSeries:
    """(1 - t x)^{-m} as a series in x: coefficient of x^k is binom(k+m-1, m-1) t^k."""
    if multiplicity == 0:
        return QSeries.one(order)

    return QSeries.from_coefficients(
        order, [Poly.monomial(k, comb(k + multiplicity - 1, multiplicity - 1)) for k in range(order + 1)]
    )


def delta_ratio(multiplicity: int, order: int) -> QSeries:
    """((1 - x)/(1 - t x))^m as a series in x."""
    numerator = QSeries.from_coefficients(order, [Poly.one(), Poly.constant(-1)]) ** multiplicity

    return numerator * negative_binomial(multiplicity, order)
