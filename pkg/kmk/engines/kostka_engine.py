from __future__ import annotations
from concurrent import futures
from typing import Optional
from attr import define, field, Factory
from kmk.artifacts import CheckArtifact
from kmk.engines import BaseEngine, CharacterEngine, KostantEngine, KostkaTable
from kmk.errors import HeightBoundExceededError, NotDominantError, PreconditionViolatedError
from kmk.lie import RootSlice, Weight
from kmk.series import Poly
from kmk.utils import execute_futures_dict
from kmk.utils.comparison import Mismatch, compare_polys, first_mismatch


@define
class KostkaEngine(BaseEngine):
    kostant_engine: KostantEngine = field(
        default=Factory(lambda self: KostantEngine(datum=self.datum), takes_self=True),
        kw_only=True
    )
    character_engine: CharacterEngine = field(
        default=Factory(lambda self: CharacterEngine(datum=self.datum), takes_self=True),
        kw_only=True
    )
    futures_executor: Optional[futures.Executor] = field(default=None, kw_only=True)

    def lusztig(self, weight: Weight, mu: Weight, root_slice: Optional[RootSlice] = None) -> Poly:
        """Lusztig's t-analog of weight multiplicity, equal to K_{weight, mu}(t)."""
        for w in (weight, mu):
            if not w.is_dominant():
                raise NotDominantError(f"{w} is not dominant")

        offset = self.datum.offset(weight, mu)

        if offset is None:
            return Poly.zero()
        if root_slice is not None and offset.height > root_slice.height_bound:
            raise HeightBoundExceededError(f"{mu} lies deeper than the root slice bound {root_slice.height_bound}")

        rho = self.datum.weyl_vector()
        floor = mu + rho
        table = self.kostant_engine.generating_series(offset.height, root_slice)
        total = Poly.zero()

        for point in self.datum.weyl.orbit_interval(weight + rho, floor):
            total = total + table.coefficient(self.datum.offset(point.weight, floor)) * point.parity

        return total

    def kostka_table(self, weight: Weight, depth: int, root_slice: Optional[RootSlice] = None) -> KostkaTable:
        if not weight.is_dominant():
            raise NotDominantError(f"{weight} is not dominant")

        cone = [mu for _, mu in self.datum.dominant_cone(weight, depth)]

        if self.futures_executor is None:
            values = {mu: self.lusztig(weight, mu, root_slice) for mu in cone}
        else:
            # warm the shared partition table before fanning out
            self.kostant_engine.generating_series(depth, root_slice)
            values = execute_futures_dict({
                mu: self.futures_executor.submit(self.lusztig, weight, mu, root_slice) for mu in cone
            })

        self.logger.debug("Kostka table of %s below %s: %d dominant weights", self.datum.label, weight, len(cone))

        return KostkaTable(weight=weight, depth=depth, entries=values)

    def classical_kostka_for_module(self, decomposition: list[tuple[Weight, int]], gamma: Weight) -> Poly:
        """K_{V, gamma}(t) for V = sum m_pi L(pi)."""
        total = Poly.zero()

        for highest, multiplicity in decomposition:
            total = total + self.lusztig(highest, gamma) * multiplicity

        return total

    def adjoint_tensor_kostka(self, weight: Weight) -> Poly:
        """K_{V, weight}(t) for V = adjoint (x) L(weight), finite type."""
        self.require_finite()
        decomposition = self.character_engine.tensor_decompose(self.datum.highest_root_weight(), weight)

        return self.classical_kostka_for_module(decomposition, weight)

    def verify_prop61(self, weight: Weight) -> CheckArtifact:
        """K_{weight, weight - delta}(t) = t K_{V, w}(t) with V the adjoint module tensored with L(w).

        Here w restricts ``weight`` to the finite part obtained by deleting a node of mark 1
        at which ``weight`` has a positive label; every such node is checked.
        """
        self.require_affine()
        p = self.datum.affine_node

        if not weight.is_dominant():
            raise NotDominantError(f"{weight} is not dominant")
        if weight.labels[p] < 1:
            raise PreconditionViolatedError(f"{weight} has label 0 at the affine node")

        lhs = self.lusztig(weight, weight - self.datum.delta_weight())
        details = {"lhs": str(lhs), "lhs_nonnegative": lhs.is_nonnegative()}
        mismatches = []

        for node in range(self.datum.rank):
            if self.datum.marks[node] != 1 or weight.labels[node] < 1:
                continue
            finite = KostkaEngine(datum=self.datum.finite_part(node))
            rhs = finite.adjoint_tensor_kostka(self.datum.restrict(weight, node)) * Poly.t()
            details[f"rhs_node_{node}"] = str(rhs)
            mismatches.append(compare_polys(rhs, lhs, label=f"node {node}"))

        mismatch = first_mismatch(*mismatches)

        return CheckArtifact(
            mismatch is None and lhs.is_nonnegative(),
            name="prop61",
            details=details,
            mismatch=mismatch
        )

    def verify_degrees(self, level: int = 1) -> CheckArtifact:
        """K_{level Lambda_0, level Lambda_0 - delta}(t) is the sum of t^d over the degrees d."""
        self.require_affine()

        if level < 1:
            raise PreconditionViolatedError("the level must be positive")

        weight = self.datum.fundamental_weight(self.datum.affine_node) * level
        actual = self.lusztig(weight, weight - self.datum.delta_weight())
        degrees = self.datum.finite_part().degrees()
        expected = sum((Poly.monomial(d) for d in degrees), Poly.zero())
        mismatch = compare_polys(expected, actual, label=str(weight))

        return CheckArtifact(
            mismatch is None,
            name="degrees",
            details={"weight": str(weight), "degrees": degrees, "kostka": str(actual)},
            mismatch=mismatch
        )

    def verify_highest_root(self) -> CheckArtifact:
        """K_{theta, 0}(t) is the sum of t^e over the exponents e (finite type)."""
        self.require_finite()
        theta = self.datum.highest_root_weight()
        actual = self.lusztig(theta, self.datum.zero_weight())
        exponents = self.datum.exponents()
        expected = sum((Poly.monomial(e) for e in exponents), Poly.zero())
        mismatch = compare_polys(expected, actual, label=str(theta))

        return CheckArtifact(
            mismatch is None,
            name="highest-root",
            details={"exponents": exponents, "kostka": str(actual)},
            mismatch=mismatch
        )

    def verify_multiplicities(self, weight: Weight, depth: int) -> CheckArtifact:
        """K_{weight, mu}(1) against Freudenthal's multiplicity for every dominant mu in the cone."""
        checked = 0
        mismatch: Optional[Mismatch] = None

        for beta, mu in self.datum.dominant_cone(weight, depth):
            expected = Poly.constant(self.character_engine.freudenthal_multiplicity(weight, mu))
            actual = Poly.constant(self.lusztig(weight, mu).evaluate(1))
            checked += 1
            mismatch = compare_polys(expected, actual, offset=beta.coeffs, label=str(mu))
            if mismatch:
                break

        return CheckArtifact(
            mismatch is None,
            name="multiplicities",
            details={"weight": str(weight), "depth": depth, "checked": checked},
            mismatch=mismatch
        )
