from __future__ import annotations
from typing import TYPE_CHECKING, Callable, Iterable, Optional, TypeVar
from attr import converters, define, field
from kmk.series.poly import Poly

if TYPE_CHECKING:
    from kmk.series import FormalSeries, QSeries

K = TypeVar("K")


@define(frozen=True)
class Mismatch:
    """First coefficient at which two computed objects disagree."""

    expected: Poly = field(kw_only=True)
    actual: Poly = field(kw_only=True)
    q_order: Optional[int] = field(default=None, kw_only=True)
    offset: Optional[tuple[int, ...]] = field(default=None, converter=converters.optional(tuple), kw_only=True)
    t_degree: Optional[int] = field(default=None, kw_only=True)
    label: Optional[str] = field(default=None, kw_only=True)

    def __str__(self) -> str:
        location = [
            f"{name}={value}"
            for name, value in (
                ("label", self.label), ("q_order", self.q_order), ("offset", self.offset), ("t_degree", self.t_degree)
            )
            if value is not None
        ]

        return f"expected {self.expected}, got {self.actual} at {', '.join(location) or 'top level'}"


def compare_polys(expected: Poly, actual: Poly, **location) -> Optional[Mismatch]:
    if expected == actual:
        return None

    degree = next(
        d for d in range(max(expected.degree, actual.degree) + 1) if expected.coefficient(d) != actual.coefficient(d)
    )

    return Mismatch(expected=expected, actual=actual, t_degree=degree, **location)


def compare_qseries(expected: QSeries, actual: QSeries, **location) -> Optional[Mismatch]:
    for k in range(min(expected.order, actual.order) + 1):
        mismatch = compare_polys(expected.coefficient(k), actual.coefficient(k), q_order=k, **location)
        if mismatch:
            return mismatch

    return None


def compare_series(expected: FormalSeries, actual: FormalSeries, **location) -> Optional[Mismatch]:
    difference = expected - actual

    if difference.is_zero():
        return None

    beta, _ = difference.items()[0]
    weight = difference.anchor - difference.datum.weight_of(beta)

    return compare_polys(
        expected.coefficient_at(weight), actual.coefficient_at(weight), offset=beta.coeffs, **location
    )


def compare_maps(
        expected: dict[K, Poly],
        actual: dict[K, Poly],
        keys: Iterable[K],
        locate: Callable[[K], dict]
) -> Optional[Mismatch]:
    for key in keys:
        mismatch = compare_polys(expected.get(key, Poly.zero()), actual.get(key, Poly.zero()), **locate(key))
        if mismatch:
            return mismatch

    return None


def first_mismatch(*mismatches: Optional[Mismatch]) -> Optional[Mismatch]:
    return next((m for m in mismatches if m is not None), None)
