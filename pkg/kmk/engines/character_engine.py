from __future__ import annotations
import threading
from fractions import Fraction
from typing import Optional
from attr import define, field
from kmk.engines import BaseEngine
from kmk.errors import HeightBoundExceededError, NotDominantError, ZeroDenominatorError
from kmk.lie import Weight
from kmk.series import FormalSeries, Poly


@define
class CharacterEngine(BaseEngine):
    """Weight multiplicities by Freudenthal's recursion, truncated characters and tensor products."""

    _multiplicities: dict[tuple[Weight, Weight], int] = field(factory=dict, init=False)
    _lock: threading.Lock = field(factory=threading.Lock, init=False)

    def freudenthal_multiplicity(self, weight: Weight, mu: Weight, depth: Optional[int] = None) -> int:
        if not weight.is_dominant():
            raise NotDominantError(f"{weight} is not dominant")

        offset = self.datum.offset(weight, mu)

        if offset is None:
            return 0
        if depth is not None and offset.height > depth:
            raise HeightBoundExceededError(f"{mu} lies deeper than {depth} below {weight}")
        if self.datum.is_affine and self.datum.level(weight) == 0:
            # L(c delta) is one-dimensional
            return 1 if offset.is_zero() else 0

        return self._multiplicity(weight, mu)

    def _multiplicity(self, weight: Weight, mu: Weight) -> int:
        if self.datum.offset(weight, mu) is None:
            return 0

        mu = self.datum.weyl.to_dominant(mu).dominant
        offset = self.datum.offset(weight, mu)

        if offset is None:
            return 0
        if offset.is_zero():
            return 1

        key = (weight, mu)
        with self._lock:
            if key in self._multiplicities:
                return self._multiplicities[key]

        rho = self.datum.weyl_vector()
        top, here = weight + rho, mu + rho
        denominator = self.datum.bilinear(top, top) - self.datum.bilinear(here, here)

        if denominator == 0:
            raise ZeroDenominatorError(f"Freudenthal denominator vanishes at {mu} below {weight}")

        total = Fraction(0)

        for root, multiplicity in self.datum.roots_up_to(offset.height).roots():
            root_weight = self.datum.weight_of(root)
            k = 1
            while k * root.height <= offset.height:
                shifted = mu + root_weight * k
                value = self._multiplicity(weight, shifted)
                if value:
                    total += multiplicity * value * Fraction(self.datum.bilinear(shifted, root))
                k += 1

        result = 2 * total / Fraction(denominator)

        if result.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {result} at {mu} below {weight}")

        with self._lock:
            self._multiplicities[key] = int(result)

        return int(result)

    def character(self, weight: Weight, depth: int) -> FormalSeries:
        """ch L(weight) truncated at ``depth``, anchored at ``weight``."""
        terms = {}

        for _, mu in self.datum.dominant_cone(weight, depth):
            multiplicity = self.freudenthal_multiplicity(weight, mu)
            if multiplicity == 0:
                continue
            for nu in self.datum.weyl.orbit_within(mu, weight, depth):
                terms[self.datum.offset(weight, nu)] = Poly.constant(multiplicity)

        return FormalSeries(datum=self.datum, anchor=weight, depth=depth, terms=terms)

    def lowest_depth(self, weight: Weight) -> int:
        """Height of weight - w0(weight), the depth that holds a whole finite-type character."""
        self.require_finite()
        lowest = -self.datum.weyl.to_dominant(-weight).dominant

        return self.datum.offset(weight, lowest).height

    def tensor_decompose(self, first: Weight, second: Weight) -> list[tuple[Weight, int]]:
        """Highest weights of L(first) (x) L(second) with multiplicities, highest first."""
        self.require_finite()

        for weight in (first, second):
            if not weight.is_dominant():
                raise NotDominantError(f"{weight} is not dominant")

        top = first + second
        depth = self.lowest_depth(top)
        remaining = self.character(first, depth) * self.character(second, depth)
        decomposition = []

        while not remaining.is_zero():
            beta, coefficient = remaining.items()[0]
            highest = top - self.datum.weight_of(beta)

            if not highest.is_dominant() or not coefficient.is_constant() or coefficient.constant_term < 0:
                raise ArithmeticError(f"tensor product peeling stalled at {highest}")

            decomposition.append((highest, coefficient.constant_term))
            remaining = remaining - self.character(highest, depth - beta.height).rebase(top) * coefficient

        return decomposition
