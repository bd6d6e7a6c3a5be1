from __future__ import annotations
from typing import TYPE_CHECKING, Callable, Mapping, Optional, Union
from attr import define, field
from kmk.errors import AnchorNotLatticeCompatibleError, HeightBoundExceededError, NotInvertibleError
from kmk.lie.root_vector import RootVector
from kmk.lie.weight import Weight
from kmk.series.poly import Poly
from kmk.series.q_series import QSeries

if TYPE_CHECKING:
    from kmk.lie.cartan_datum import CartanDatum


def _drop_zeros(terms: Mapping[RootVector, Poly]) -> dict[RootVector, Poly]:
    return {beta: c for beta, c in terms.items() if not c.is_zero()}


@define(frozen=True)
class FormalSeries:
    """Truncated sum of coeff(beta) * e^(anchor - beta) over beta in Q+ with height <= depth."""

    datum: CartanDatum = field(kw_only=True)
    anchor: Weight = field(kw_only=True)
    depth: int = field(kw_only=True)
    terms: dict[RootVector, Poly] = field(factory=dict, converter=_drop_zeros, kw_only=True)

    @terms.validator
    def validate_terms(self, _, terms: dict[RootVector, Poly]) -> None:
        for beta in terms:
            if not beta.is_nonnegative() or beta.height > self.depth:
                raise ValueError(f"offset {beta.coeffs} lies outside the depth-{self.depth} cone")

    @classmethod
    def one(cls, datum: CartanDatum, depth: int, anchor: Optional[Weight] = None) -> FormalSeries:
        return cls.monomial(datum, anchor or datum.zero_weight(), depth)

    @classmethod
    def monomial(cls, datum: CartanDatum, weight: Weight, depth: int, coefficient: Poly = Poly.one()) -> FormalSeries:
        return cls(datum=datum, anchor=weight, depth=depth, terms={RootVector.zero(datum.rank): coefficient})

    @classmethod
    def from_qseries(cls, datum: CartanDatum, series: QSeries, depth: int) -> FormalSeries:
        delta = datum.delta()
        terms = {
            delta * k: series.coefficient(k)
            for k in range(series.order + 1)
            if k * delta.height <= depth
        }

        return cls(datum=datum, anchor=datum.zero_weight(), depth=depth, terms=terms)

    def coefficient(self, offset: RootVector) -> Poly:
        return self.terms.get(offset, Poly.zero())

    def coefficient_at(self, weight: Weight) -> Poly:
        offset = self.datum.offset(self.anchor, weight)

        if offset is None:
            return Poly.zero()
        if offset.height > self.depth:
            raise HeightBoundExceededError(f"{weight} lies below the truncation depth {self.depth}")

        return self.coefficient(offset)

    def items(self) -> list[tuple[RootVector, Poly]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def weights(self) -> list[tuple[Weight, Poly]]:
        return [(self.anchor - self.datum.weight_of(beta), c) for beta, c in self.items()]

    def is_zero(self) -> bool:
        return not self.terms

    def _replace(self, terms: Mapping[RootVector, Poly], anchor: Optional[Weight] = None,
                 depth: Optional[int] = None) -> FormalSeries:
        depth = self.depth if depth is None else depth

        return FormalSeries(
            datum=self.datum,
            anchor=self.anchor if anchor is None else anchor,
            depth=depth,
            terms={beta: c for beta, c in terms.items() if beta.height <= depth}
        )

    def map_coefficients(self, function: Callable[[Poly], Poly]) -> FormalSeries:
        return self._replace({beta: function(c) for beta, c in self.terms.items()})

    def evaluate_t(self, value: int) -> FormalSeries:
        return self.map_coefficients(lambda c: Poly.constant(c.evaluate(value)))

    def truncate_t(self, max_degree: int) -> FormalSeries:
        return self.map_coefficients(lambda c: c.truncate(max_degree))

    def truncate(self, depth: int) -> FormalSeries:
        if depth > self.depth:
            raise HeightBoundExceededError(f"cannot extend depth {self.depth} to {depth}")

        return self._replace(self.terms, depth=depth)

    def shift(self, weight: Weight) -> FormalSeries:
        """Multiply by e^weight."""
        return self._replace(self.terms, anchor=self.anchor + weight)

    def rebase(self, anchor: Weight) -> FormalSeries:
        """Re-express the series relative to a higher anchor."""
        lift = self.datum.offset(anchor, self.anchor)

        if lift is None:
            raise AnchorNotLatticeCompatibleError(f"{anchor} is not above {self.anchor}")

        return FormalSeries(
            datum=self.datum,
            anchor=anchor,
            depth=self.depth + lift.height,
            terms={beta + lift: c for beta, c in self.terms.items()}
        )

    def _aligned(self, other: FormalSeries) -> tuple[FormalSeries, FormalSeries]:
        if self.datum.dominates(self.anchor, other.anchor):
            other = other.rebase(self.anchor)
        elif self.datum.dominates(other.anchor, self.anchor):
            self = self.rebase(other.anchor)
        else:
            raise AnchorNotLatticeCompatibleError(f"anchors {self.anchor} and {other.anchor} are not comparable")

        depth = min(self.depth, other.depth)

        return self.truncate(depth), other.truncate(depth)

    def __neg__(self) -> FormalSeries:
        return self.map_coefficients(lambda c: -c)

    def __add__(self, other: FormalSeries) -> FormalSeries:
        if not isinstance(other, FormalSeries):
            return NotImplemented

        left, right = self._aligned(other)
        terms = dict(left.terms)

        for beta, c in right.terms.items():
            terms[beta] = terms.get(beta, Poly.zero()) + c

        return left._replace(terms)

    def __sub__(self, other: FormalSeries) -> FormalSeries:
        if not isinstance(other, FormalSeries):
            return NotImplemented

        return self + (-other)

    def __mul__(self, other: Union[FormalSeries, Poly, int]) -> FormalSeries:
        if isinstance(other, (Poly, int)):
            return self.map_coefficients(lambda c: c * other)
        if not isinstance(other, FormalSeries):
            return NotImplemented

        return fs_mul(self, other)

    __rmul__ = __mul__

    def multiply_root_series(self, root: RootVector, factor: QSeries) -> FormalSeries:
        """Multiply by sum_k factor[k] e^(-k root)."""
        reach = self.depth // root.height

        if factor.order < reach:
            raise HeightBoundExceededError(f"factor of order {factor.order} does not reach depth {self.depth}")

        terms: dict[RootVector, Poly] = {}

        for beta, c in self.terms.items():
            for k in range((self.depth - beta.height) // root.height + 1):
                weight = factor.coefficients[k]
                if weight.is_zero():
                    continue
                key = beta + root * k
                terms[key] = terms.get(key, Poly.zero()) + c * weight

        return self._replace(terms)

    def inverse(self) -> FormalSeries:
        return fs_invertible_inverse(self)

    def constant_term(self) -> QSeries:
        return constant_term(self)

    def __str__(self) -> str:
        parts = [f"({c})*e^{weight}" for weight, c in self.weights()]

        return " + ".join(parts) or "0"


def fs_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    depth = min(a.depth, b.depth)
    left, right = a.items(), b.items()
    terms: dict[RootVector, Poly] = {}

    for beta, x in left:
        if beta.height > depth:
            break
        for gamma, y in right:
            if beta.height + gamma.height > depth:
                break
            key = beta + gamma
            terms[key] = terms.get(key, Poly.zero()) + x * y

    return FormalSeries(datum=a.datum, anchor=a.anchor + b.anchor, depth=depth, terms=terms)


def fs_invertible_inverse(a: FormalSeries) -> FormalSeries:
    zero = RootVector.zero(a.datum.rank)
    head = a.coefficient(zero)

    if not head.is_constant() or head.constant_term not in (1, -1):
        raise NotInvertibleError(f"leading coefficient {head} is not a unit")

    unit = head.constant_term
    support = [(beta, c) for beta, c in a.items() if not beta.is_zero()]

    # offsets reachable as sums of support offsets
    keys = {zero}
    frontier = [zero]
    while frontier:
        following = []
        for key in frontier:
            for beta, _ in support:
                candidate = key + beta
                if candidate.height <= a.depth and candidate not in keys:
                    keys.add(candidate)
                    following.append(candidate)
        frontier = following

    inverse: dict[RootVector, Poly] = {}

    for key in sorted(keys, key=RootVector.sort_key):
        if key.is_zero():
            inverse[key] = Poly.constant(unit)
            continue
        total = Poly.zero()
        for beta, c in support:
            rest = key - beta
            if rest.is_nonnegative() and rest in inverse:
                total = total + c * inverse[rest]
        inverse[key] = total * (-unit)

    return FormalSeries(datum=a.datum, anchor=-a.anchor, depth=a.depth, terms=inverse)


def constant_term(f: FormalSeries) -> QSeries:
    """Project onto the pure-delta terms, read as a series in q = e^{-delta}."""
    datum = f.datum
    base, level = datum.form_coordinates(f.anchor)

    if level != 0 or not all(isinstance(v, int) for v in base):
        raise AnchorNotLatticeCompatibleError(f"anchor {f.anchor} is not in the root lattice span")

    delta = datum.delta()
    height = sum(base)
    order = (f.depth - height) // delta.height

    if order < 0:
        raise HeightBoundExceededError(f"depth {f.depth} does not reach the anchor {f.anchor}")

    coefficients = [Poly.zero()] * (order + 1)

    for beta, c in f.terms.items():
        difference = [x - y for x, y in zip(beta.coeffs, base)]
        k = difference[datum.affine_node]
        if any(d != k * m for d, m in zip(difference, delta.coeffs)):
            continue
        if k < 0:
            raise AnchorNotLatticeCompatibleError("constant term carries negative powers of q")
        coefficients[k] = c

    return QSeries(order, tuple(coefficients))
