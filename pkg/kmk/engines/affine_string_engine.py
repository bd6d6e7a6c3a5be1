from __future__ import annotations
from fractions import Fraction
from itertools import product
from typing import Optional
from attr import define, field, Factory
from kmk.artifacts import CheckArtifact
from kmk.engines import BaseEngine, HallLittlewoodEngine, KostkaEngine, StringFunction
from kmk.errors import NotDominantError, PreconditionViolatedError
from kmk.lie import RootVector, Weight
from kmk.series import FormalSeries, Poly, QSeries, delta_ratio, pochhammer
from kmk.utils.comparison import compare_polys, compare_qseries, compare_series, first_mismatch


@define
class AffineStringEngine(BaseEngine):
    """t-string functions and the constant-term identities of untwisted affine algebras."""

    hall_littlewood_engine: HallLittlewoodEngine = field(
        default=Factory(lambda self: HallLittlewoodEngine(datum=self.datum), takes_self=True),
        kw_only=True
    )

    def __attrs_post_init__(self) -> None:
        self.require_affine()

    @property
    def kostka_engine(self) -> KostkaEngine:
        return self.hall_littlewood_engine.kostka_engine

    @property
    def imaginary_multiplicity(self) -> int:
        return self.datum.rank - 1

    def max_set(self, weight: Weight, depth: int) -> list[Weight]:
        """Dominant mu <= weight with mu + delta not <= weight, within ``depth``."""
        if not weight.is_dominant():
            raise NotDominantError(f"{weight} is not dominant")

        marks = self.datum.marks

        return [
            mu
            for beta, mu in self.datum.dominant_cone(weight, depth)
            if any(b < a for b, a in zip(beta.coeffs, marks))
        ]

    def t_string(self, weight: Weight, mu: Weight, order: int) -> StringFunction:
        """ct(e^{-mu} delta_tilde ch L(weight)) as a series in q."""
        offset = self.datum.offset(weight, mu)

        if not mu.is_dominant():
            raise NotDominantError(f"{mu} is not dominant")
        if offset is None or all(b >= a for b, a in zip(offset.coeffs, self.datum.marks)):
            raise PreconditionViolatedError(f"{mu} is not a maximal weight of L({weight})")

        depth = offset.height + order * self.datum.delta_height
        engine = self.hall_littlewood_engine
        series = (engine.delta_tilde(depth) * engine.character(weight, depth)).shift(-mu)

        return StringFunction(weight=weight, floor=mu, series=series.constant_term())

    def level0_string(self, order: int) -> QSeries:
        return self.hall_littlewood_engine.delta_tilde(order * self.datum.delta_height).constant_term()

    def delta_im(self, order: int) -> QSeries:
        """prod_k ((1 - q^k) / (1 - t q^k))^l."""
        return (pochhammer(0, order) / pochhammer(1, order)) ** self.imaginary_multiplicity

    def cherednik_ct_mu(self, order: int) -> QSeries:
        result = QSeries.one(order)

        for height, count in self.datum.finite_part().coroot_height_counts().items():
            factor = pochhammer(height, order) ** 2 / (pochhammer(height + 1, order) * pochhammer(height - 1, order))
            result = result * factor ** count

        return result

    def cherednik_ct_mu_theta(self, order: int) -> QSeries:
        result = QSeries.one(order)

        for height, count in self.datum.finite_part().coroot_height_counts().items():
            result = result * (pochhammer(height, order) / pochhammer(height + 1, order)) ** count

        return result

    def mu_hat(self, depth: int) -> FormalSeries:
        """prod over positive real roots of (1 - e^{-alpha}) / (1 - t e^{-alpha})."""
        series = FormalSeries.one(self.datum, depth)

        for root in self.datum.roots_up_to(depth).real_roots:
            series = series.multiply_root_series(root, delta_ratio(1, depth // root.height))

        return series

    def theta_series(self, order: int) -> FormalSeries:
        """sum of e^alpha q^{(alpha, alpha)/2} over the lattice spanned by alpha_i / epsilon_i of the finite part.

        In simply-laced type that lattice is the finite root lattice.
        """
        depth = order * self.datum.delta_height
        p = self.datum.affine_node
        nodes = [i for i in range(self.datum.rank) if i != p]
        steps = [Fraction(1) / Fraction(self.datum.epsilon[i]) for i in nodes]
        marks = self.datum.marks
        terms = {}

        for k in range(depth + 1):
            ranges = [range(k * marks[i] - depth, k * marks[i] + 1) for i in nodes]
            for coordinates in product(*ranges):
                if any(c % s for c, s in zip(coordinates, steps)):
                    continue
                alpha = [0] * self.datum.rank
                for i, c in zip(nodes, coordinates):
                    alpha[i] = c
                alpha = RootVector(alpha)
                if self.datum.bilinear(alpha, alpha) != 2 * k:
                    continue
                beta = self.datum.delta() * k - alpha
                if beta.height <= depth:
                    terms[beta] = Poly.one()

        return FormalSeries(datum=self.datum, anchor=self.datum.zero_weight(), depth=depth, terms=terms)

    def level0_check(self, order: int) -> CheckArtifact:
        """ct(delta_tilde) = delta_im ct(mu_hat), with ct(mu_hat) given by Cherednik's product."""
        direct = self.level0_string(order)
        cherednik = self.cherednik_ct_mu(order)
        mu_hat = self.mu_hat(order * self.datum.delta_height).constant_term()
        mismatch = first_mismatch(
            compare_qseries(self.delta_im(order) * cherednik, direct, label="ct(delta_tilde)"),
            compare_qseries(cherednik, mu_hat, label="ct(mu_hat)")
        )

        return CheckArtifact(
            mismatch is None,
            name="level0",
            details={"order": order, "ct_delta_tilde": direct.to_lists()},
            mismatch=mismatch
        )

    def level1_check(self, order: int) -> CheckArtifact:
        """The vacuum string of L(Lambda_0) divided by its t = 1 value is prod_i (q; q) / (t^{d_i} q; q)."""
        fundamental = self.datum.fundamental_weight(self.datum.affine_node)
        string = self.t_string(fundamental, fundamental, order).series
        at_one = string.evaluate_t(1)
        ratio = string / at_one
        degrees = self.datum.finite_part().degrees()
        product_form = QSeries.one(order)

        for d in degrees:
            product_form = product_form * pochhammer(0, order) / pochhammer(d, order)

        mismatches = [
            compare_qseries(product_form, ratio, label="degree product"),
            compare_qseries(self.delta_im(order) * self.cherednik_ct_mu_theta(order), ratio, label="macdonald-mehta")
        ]

        if order >= 1:
            expected = sum((Poly.monomial(d) for d in degrees), Poly.zero())
            mismatches.append(compare_polys(expected, string.coefficient(1), q_order=1, label="first coefficient"))

        if self.datum.is_simply_laced:
            depth = order * self.datum.delta_height
            theta = self.theta_series(order)
            closed = QSeries.one(order)
            for d in degrees:
                closed = closed / pochhammer(d, order)
            mismatches += [
                compare_qseries(closed, string, label="closed form"),
                compare_qseries(pochhammer(0, order) ** -self.imaginary_multiplicity, at_one, label="t = 1"),
                compare_qseries(
                    self.cherednik_ct_mu_theta(order), (self.mu_hat(depth) * theta).constant_term(), label="ct(mu_hat theta)"
                ),
                compare_series(
                    FormalSeries.from_qseries(self.datum, at_one, depth) * theta,
                    self.hall_littlewood_engine.character(fundamental, depth).shift(-fundamental),
                    label="theta"
                )
            ]

        mismatch = first_mismatch(*mismatches)

        return CheckArtifact(
            mismatch is None,
            name="level1",
            details={"order": order, "degrees": degrees, "string": string.to_lists()},
            mismatch=mismatch
        )

    def macdonald_identity_check(self, t_degree: int, weight_depth: int, extra_radius: int = 0) -> CheckArtifact:
        """W(t)^{-1} sum_w prod_{alpha in S(w)} (t - e^{-alpha}) / (1 - t e^{-alpha}) = mu_hat / ct(mu_hat).

        Each factor contributes t or at least one unit of height, so only w with
        length <= t_degree + weight_depth survive the joint truncation.
        """
        elements = self.datum.weyl.ball(t_degree + weight_depth + extra_radius)
        inverse_poincare = self.datum.weyl.poincare_series(elements, t_degree).inverse_truncated(t_degree)
        lhs = FormalSeries(datum=self.datum, anchor=self.datum.zero_weight(), depth=weight_depth)

        for element in elements:
            term = FormalSeries.one(self.datum, weight_depth)
            for root in element.inversions:
                term = term.multiply_root_series(root, self._inversion_factor(weight_depth // root.height))
                term = term.truncate_t(t_degree)
            lhs = lhs + term

        lhs = (lhs * inverse_poincare).truncate_t(t_degree)
        ct = self.cherednik_ct_mu(weight_depth // self.datum.delta_height).inverse()
        rhs = (self.mu_hat(weight_depth) * FormalSeries.from_qseries(self.datum, ct, weight_depth)).truncate_t(t_degree)
        mismatch = compare_series(rhs, lhs)

        return CheckArtifact(
            mismatch is None,
            name="macdonald",
            details={"t_degree": t_degree, "weight_depth": weight_depth, "weyl_elements": len(elements)},
            mismatch=mismatch
        )

    def _inversion_factor(self, order: int) -> QSeries:
        # (t - x) / (1 - t x) = t + sum_{k >= 1} (t^{k+1} - t^{k-1}) x^k
        return QSeries.from_coefficients(
            order, [Poly.t()] + [Poly.monomial(k + 1) - Poly.monomial(k - 1) for k in range(1, order + 1)]
        )

    def verify_string_routes(self, weight: Weight, order: int, depth: Optional[int] = None) -> CheckArtifact:
        """Every t-string coefficient equals the Lusztig-formula value K_{weight, mu - k delta}(t)."""
        depth = self.datum.delta_height if depth is None else depth
        mismatches = []
        floors = self.max_set(weight, depth)

        for mu in floors:
            string = self.t_string(weight, mu, order)
            for k in range(order + 1):
                expected = self.kostka_engine.lusztig(weight, mu - self.datum.delta_weight(k))
                mismatches.append(compare_polys(expected, string.series.coefficient(k), q_order=k, label=str(mu)))

        mismatch = first_mismatch(*mismatches)

        return CheckArtifact(
            mismatch is None,
            name="string-routes",
            details={"weight": str(weight), "order": order, "floors": [str(mu) for mu in floors]},
            mismatch=mismatch
        )
