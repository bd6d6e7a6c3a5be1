from __future__ import annotations
from typing import Iterable, Union
from attr import define, field
from kmk.errors import NotInvertibleError


def _normalize(coefficients: Iterable[int]) -> tuple[int, ...]:
    values = [int(c) for c in coefficients]

    while values and values[-1] == 0:
        values.pop()

    return tuple(values)


@define(frozen=True)
class Poly:
    """Integer polynomial in t, stored as ascending coefficients without trailing zeros."""

    coefficients: tuple[int, ...] = field(default=(), converter=_normalize)

    @classmethod
    def zero(cls) -> Poly:
        return cls()

    @classmethod
    def one(cls) -> Poly:
        return cls((1,))

    @classmethod
    def t(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, value: int) -> Poly:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> Poly:
        if degree < 0:
            raise ValueError("negative powers of t are not supported")

        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def constant_term(self) -> int:
        return self.coefficients[0] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_constant(self) -> bool:
        return self.degree <= 0

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def coefficient(self, degree: int) -> int:
        return self.coefficients[degree] if 0 <= degree < len(self.coefficients) else 0

    def evaluate(self, value: int) -> int:
        result = 0

        for c in reversed(self.coefficients):
            result = result * value + c

        return result

    def negate_t(self) -> Poly:
        return Poly(c if k % 2 == 0 else -c for k, c in enumerate(self.coefficients))

    def shift(self, degree: int) -> Poly:
        return Poly((0,) * degree + self.coefficients) if self.coefficients else self

    def truncate(self, max_degree: int) -> Poly:
        return Poly(self.coefficients[:max_degree + 1])

    def inverse_truncated(self, max_degree: int) -> Poly:
        """Power-series inverse modulo t^(max_degree+1); needs constant term ±1."""
        head = self.constant_term

        if head not in (1, -1):
            raise NotInvertibleError(f"{self} has no inverse in Z[[t]]")

        inverse = [0] * (max_degree + 1)
        inverse[0] = head

        for n in range(1, max_degree + 1):
            total = sum(self.coefficient(k) * inverse[n - k] for k in range(1, n + 1))
            inverse[n] = -head * total

        return Poly(inverse)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coefficients)

    def __add__(self, other: Union[Poly, int]) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented

        size = max(len(self.coefficients), len(other.coefficients))

        return Poly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __sub__(self, other: Union[Poly, int]) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented

        return self + (-other)

    def __rsub__(self, other: Union[Poly, int]) -> Poly:
        return (-self) + other

    def __mul__(self, other: Union[Poly, int]) -> Poly:
        if isinstance(other, int):
            return Poly(c * other for c in self.coefficients)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coefficients or not other.coefficients:
            return Poly()

        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)

        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b

        return Poly(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("negative exponent")

        result = Poly.one()
        base = self

        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1

        return result

    def __str__(self) -> str:
        return self.render()

    def render(self, variable: str = "t", latex: bool = False) -> str:
        if not self.coefficients:
            return "0"

        parts = []

        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue

            if degree == 0:
                body = str(abs(c))
            else:
                power = variable if degree == 1 else (
                    f"{variable}^{{{degree}}}" if latex else f"{variable}^{degree}"
                )
                body = power if abs(c) == 1 else f"{abs(c)}{'' if latex else '*'}{power}"

            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")

        return " ".join(parts)

    def to_list(self) -> list[int]:
        return list(self.coefficients)


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly.constant(value)

    return NotImplemented
