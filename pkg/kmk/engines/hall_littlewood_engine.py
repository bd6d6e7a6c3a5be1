from __future__ import annotations
from fractions import Fraction
from math import comb, floor
from typing import Optional
from attr import define, field, Factory
from kmk.artifacts import CheckArtifact
from kmk.engines import BaseEngine, CharacterEngine, HLExpansion, KostkaEngine, KostkaTable
from kmk.errors import NotDominantError, NotRegularDominantError, PreconditionViolatedError
from kmk.lie import RootSlice, RootVector, Weight
from kmk.series import FormalSeries, Poly, QSeries, delta_ratio, fs_mul
from kmk.utils.comparison import Mismatch, compare_maps, compare_series


@define
class HallLittlewoodEngine(BaseEngine):
    kostka_engine: KostkaEngine = field(
        default=Factory(lambda self: KostkaEngine(datum=self.datum), takes_self=True),
        kw_only=True
    )

    @property
    def character_engine(self) -> CharacterEngine:
        return self.kostka_engine.character_engine

    def character(self, weight: Weight, depth: int) -> FormalSeries:
        return self.character_engine.character(weight, depth)

    def delta_tilde(self, depth: int, root_slice: Optional[RootSlice] = None) -> FormalSeries:
        """prod over positive roots of ((1 - e^{-alpha}) / (1 - t e^{-alpha}))^{m_alpha}."""
        root_slice = self.datum.roots_up_to(depth) if root_slice is None else root_slice.restrict(depth)
        series = FormalSeries.one(self.datum, depth)

        for root, multiplicity in root_slice.roots():
            series = series.multiply_root_series(root, delta_ratio(multiplicity, depth // root.height))

        return series

    def c_expansion(self, weight: Weight, depth: int) -> HLExpansion:
        """Invert the unitriangular Kostka matrix on the depth cone by back-substitution."""
        if not weight.is_dominant():
            raise NotDominantError(f"{weight} is not dominant")

        cone = [mu for _, mu in self.datum.dominant_cone(weight, depth)]
        coefficients: dict[Weight, Poly] = {}

        for mu in cone:
            if mu == weight:
                coefficients[mu] = Poly.one()
                continue
            total = Poly.zero()
            for pi, c in coefficients.items():
                if not c.is_zero() and pi != mu:
                    total = total + c * self.kostka_engine.lusztig(pi, mu)
            coefficients[mu] = -total

        return HLExpansion(weight=weight, depth=depth, entries=coefficients)

    def hl_function(self, weight: Weight, depth: int) -> FormalSeries:
        """P_weight(t) = sum_mu c_{weight, mu}(t) ch L(mu), anchored at ``weight``."""
        # raises for the infinite stabilizers of affine level-zero weights
        self.datum.weyl.stabilizer_poincare(weight)

        expansion = self.c_expansion(weight, depth)
        series = FormalSeries(datum=self.datum, anchor=weight, depth=depth)

        for mu, c in expansion.items():
            height = self.datum.offset(weight, mu).height
            series = series + self.character(mu, depth - height).rebase(weight) * c

        return series

    def specialize_hl(self, weight: Weight, value: int, depth: int) -> FormalSeries:
        return self.hl_function(weight, depth).evaluate_t(value)

    def _admissible_roots(self, weight: Weight, height_bound: int) -> list[tuple[RootVector, int]]:
        return [
            (root, multiplicity)
            for root, multiplicity in self.datum.roots_up_to(height_bound).roots()
            if self.datum.bilinear(weight, root) > 0
        ]

    def stembridge_bounds(self, weight: Weight, mu: Weight, t_degree: Optional[int]) -> tuple[int, int]:
        """(cap on #A, cap on ht |A|) for the Stembridge sum."""
        if not self.datum.is_affine:
            positive_roots = self.datum.positive_roots()
            cap = len(positive_roots) if t_degree is None else min(t_degree, len(positive_roots))
            return cap, sum(r.height for r in positive_roots)

        offset = self.datum.offset(weight, mu)
        cap = offset.height if t_degree is None else t_degree
        rho = self.datum.weyl_vector()
        norm = Fraction(self.datum.bilinear(weight - mu, weight + mu + rho * 2))
        smallest = min(Fraction(e) * (v + 1) for e, v in zip(self.datum.epsilon, weight.labels))

        # 2(weight + rho, x) - (x, x) is fixed, (x, x) <= 2 #A^2 and (weight + rho, x) >= smallest * ht x
        return cap, floor((norm + 2 * cap * cap) / (2 * smallest))

    def c_stembridge(self, weight: Weight, mu: Weight, t_degree: Optional[int] = None) -> Poly:
        """c_{weight, mu}(t) as a signed sum over multisets A of roots with (weight, alpha) > 0.

        Affine results are exact through t-degree ``t_degree`` (default ht(weight - mu)).
        """
        self.datum.weyl.stabilizer_poincare(weight)

        if not mu.is_dominant():
            raise NotDominantError(f"{mu} is not dominant")

        offset = self.datum.offset(weight, mu)

        if offset is None:
            return Poly.zero()

        cap, height_bound = self.stembridge_bounds(weight, mu, t_degree)
        rho = self.datum.weyl_vector()
        top = weight + rho
        target = mu + rho
        norm = self.datum.bilinear(top, top) - self.datum.bilinear(target, target)
        roots = self._admissible_roots(weight, height_bound)
        coefficients = [0] * (cap + 1)

        def visit(index: int, total: RootVector, size: int, ways: int) -> None:
            if 2 * self.datum.bilinear(top, total) - self.datum.bilinear(total, total) == norm:
                dominant = self.datum.weyl.to_dominant(top - self.datum.weight_of(total))
                if dominant.sign and dominant.dominant == target:
                    coefficients[size] += dominant.sign * ways * (-1) ** size

            for position in range(index, len(roots)):
                root, multiplicity = roots[position]
                if total.height + root.height > height_bound:
                    break
                for copies in range(1, multiplicity + 1):
                    grown = total + root * copies
                    if size + copies > cap or grown.height > height_bound:
                        break
                    visit(position + 1, grown, size + copies, ways * comb(multiplicity, copies))

        visit(0, RootVector.zero(self.datum.rank), 0, 1)

        return Poly(c for c in coefficients)

    def kostka_by_inversion(self, weight: Weight, depth: int) -> KostkaTable:
        """K_{weight, mu}(t) recovered by inverting the matrix of Stembridge coefficients."""
        cone = [mu for _, mu in self.datum.dominant_cone(weight, depth)]

        for pi in cone:
            if not self._finite_stabilizer(pi):
                raise PreconditionViolatedError(f"{pi} has an infinite stabilizer")

        values: dict[Weight, Poly] = {}

        for mu in cone:
            if mu == weight:
                values[mu] = Poly.one()
                continue
            total = Poly.zero()
            for pi, k in values.items():
                if not k.is_zero() and pi != mu and self.datum.dominates(pi, mu):
                    total = total + k * self.c_stembridge(pi, mu)
            values[mu] = -total

        return KostkaTable(weight=weight, depth=depth, entries=values)

    def kostka_by_character(self, weight: Weight, depth: int) -> KostkaTable:
        """K_{weight, mu}(t) read off the dominant coefficients of delta_tilde ch L(weight)."""
        if not weight.is_dominant():
            raise NotDominantError(f"{weight} is not dominant")

        product = self.delta_tilde(depth) * self.character(weight, depth)

        return KostkaTable(
            weight=weight,
            depth=depth,
            entries={mu: product.coefficient_at(mu) for _, mu in self.datum.dominant_cone(weight, depth)}
        )

    def _finite_stabilizer(self, weight: Weight) -> bool:
        return not self.datum.is_affine or self.datum.level(weight) != 0

    def verify_kostka_inversion(self, weight: Weight, depth: int) -> CheckArtifact:
        """Lusztig's K table against an independent route.

        Cones of finite stabilizers invert the Stembridge coefficients. Level-zero affine
        cones read K off delta_tilde ch L(weight) instead.
        """
        expected = self.kostka_engine.kostka_table(weight, depth)

        if all(self._finite_stabilizer(mu) for _, mu in self.datum.dominant_cone(weight, depth)):
            route, actual = "stembridge", self.kostka_by_inversion(weight, depth)
        else:
            route, actual = "character", self.kostka_by_character(weight, depth)

        mismatch = self._compare_tables(weight, depth, expected.entries, actual.entries)

        return CheckArtifact(
            mismatch is None,
            name="inversion",
            details={"weight": str(weight), "depth": depth, "route": route, "entries": len(expected)},
            mismatch=mismatch
        )

    def verify_stembridge(self, weight: Weight, depth: int, t_degree: Optional[int] = None) -> CheckArtifact:
        expansion = self.c_expansion(weight, depth)
        expected, actual = {}, {}

        for _, mu in self.datum.dominant_cone(weight, depth):
            value = expansion[mu]
            expected[mu] = value if t_degree is None else value.truncate(t_degree)
            actual[mu] = self.c_stembridge(weight, mu, t_degree)

        mismatch = self._compare_tables(weight, depth, expected, actual)

        return CheckArtifact(
            mismatch is None,
            name="stembridge",
            details={"weight": str(weight), "depth": depth, "t_degree": t_degree, "entries": len(expected)},
            mismatch=mismatch
        )

    def verify_dellm(self, weight: Weight, depth: int, t_value: Optional[int] = None) -> CheckArtifact:
        """The coefficient of e^mu in delta_tilde * P_weight is 1 at mu = weight and 0 at other dominant mu."""
        product = fs_mul(self.delta_tilde(depth), self.hl_function(weight, depth))

        if t_value is not None:
            product = product.evaluate_t(t_value)

        expected = {weight: Poly.one()}
        actual = {mu: product.coefficient_at(mu) for _, mu in self.datum.dominant_cone(weight, depth)}
        mismatch = self._compare_tables(weight, depth, expected, actual)

        return CheckArtifact(
            mismatch is None,
            name="dellm",
            details={"weight": str(weight), "depth": depth, "t_value": t_value, "dominant_weights": len(actual)},
            mismatch=mismatch
        )

    def verify_support(self, weight: Weight, depth: int) -> CheckArtifact:
        """Nonzero c_{weight, mu} needs weight - mu = |B| for an admissible B, and mu >= weight - 2 rho in finite type."""
        expansion = self.c_expansion(weight, depth)
        floor_weight = weight - self.datum.weyl_vector() * 2
        mismatch = None

        for mu, c in expansion.items():
            offset = self.datum.offset(weight, mu)
            realizable = self._realizable(weight, offset)
            bounded = self.datum.is_affine or self.datum.dominates(mu, floor_weight)
            if not (realizable and bounded):
                mismatch = Mismatch(expected=Poly.zero(), actual=c, offset=offset.coeffs, label=str(mu))
                break

        return CheckArtifact(
            mismatch is None,
            name="support",
            details={"weight": str(weight), "depth": depth, "nonzero": len(expansion)},
            mismatch=mismatch
        )

    def _realizable(self, weight: Weight, target: RootVector) -> bool:
        reachable = {RootVector.zero(self.datum.rank)}

        for root, multiplicity in self._admissible_roots(weight, target.height):
            grown = set(reachable)
            for total in reachable:
                for copies in range(1, multiplicity + 1):
                    candidate = total + root * copies
                    if not (target - candidate).is_nonnegative():
                        break
                    grown.add(candidate)
            reachable = grown

        return target in reachable

    def verify_tensor_minus_one(self, weight: Weight) -> CheckArtifact:
        """c_{weight, mu}(-1) is the multiplicity of L(mu) in L(weight - rho) (x) L(rho)."""
        self.require_finite()

        if not weight.is_regular_dominant():
            raise NotRegularDominantError(f"{weight} is not regular dominant")

        rho = self.datum.weyl_vector()
        depth = self.character_engine.lowest_depth(rho)
        expansion = self.c_expansion(weight, depth)
        decomposition = dict(self.character_engine.tensor_decompose(weight - rho, rho))
        expected = {mu: Poly.constant(m) for mu, m in decomposition.items()}
        actual = {mu: Poly.constant(c.evaluate(-1)) for mu, c in expansion.items()}
        mismatch = self._compare_tables(weight, depth, expected, actual)
        nonnegative = all(c.constant_term >= 0 for c in actual.values())

        return CheckArtifact(
            mismatch is None and nonnegative,
            name="tensor-minus-one",
            details={
                "weight": str(weight),
                "multiplicities": {str(mu): m for mu, m in decomposition.items()},
                "nonnegative": nonnegative
            },
            mismatch=mismatch
        )

    def verify_rho_character(self, depth: int) -> CheckArtifact:
        """ch L(rho) = e^rho prod (1 + e^{-alpha})^{m_alpha}."""
        rho = self.datum.weyl_vector()
        expected = FormalSeries.one(self.datum, depth, anchor=rho)

        for root, multiplicity in self.datum.roots_up_to(depth).roots():
            factor = QSeries.from_coefficients(depth // root.height, [1, 1]) ** multiplicity
            expected = expected.multiply_root_series(root, factor)

        mismatch = compare_series(expected, self.character(rho, depth))

        return CheckArtifact(
            mismatch is None,
            name="rho-character",
            details={"depth": depth},
            mismatch=mismatch
        )

    def _compare_tables(
            self, weight: Weight, depth: int, expected: dict[Weight, Poly], actual: dict[Weight, Poly]
    ) -> Optional[Mismatch]:
        return compare_maps(
            expected,
            actual,
            [mu for _, mu in self.datum.dominant_cone(weight, depth)],
            lambda mu: {"offset": self.datum.offset(weight, mu).coeffs, "label": str(mu)}
        )
