from __future__ import annotations
from typing import TYPE_CHECKING, TypeVar
from attr import define, field
from kmk.errors import BallTooLargeError, InfiniteStabilizerError, NotInTitsConeError, NotRegularDominantError
from kmk.lie.root_vector import RootVector
from kmk.lie.weight import Weight
from kmk.series.poly import Poly

if TYPE_CHECKING:
    from kmk.lie.cartan_datum import CartanDatum

T = TypeVar("T", Weight, RootVector)


@define(frozen=True)
class OrbitPoint:
    weight: Weight = field()
    parity: int = field()
    length: int = field()

    @parity.validator
    def validate_parity(self, _, parity: int) -> None:
        if parity != (-1) ** self.length:
            raise ValueError("parity must equal (-1)^length")


@define(frozen=True)
class DominantResult:
    dominant: Weight = field()
    sign: int = field()
    finite_stabilizer: bool = field()
    steps: int = field(default=0)

    def __iter__(self):
        return iter((self.dominant, self.sign, self.finite_stabilizer))


@define(frozen=True)
class WeylElement:
    word: tuple[int, ...] = field()
    inversions: tuple[RootVector, ...] = field()
    rho_image: Weight = field()

    @property
    def length(self) -> int:
        return len(self.word)


@define(frozen=True)
class WeylGroup:
    datum: CartanDatum = field(kw_only=True)
    max_steps: int = field(default=10_000, kw_only=True)
    max_ball_size: int = field(default=50_000, kw_only=True)

    def reflect(self, index: int, x: T) -> T:
        if not 0 <= index < self.datum.rank:
            raise IndexError(f"no simple reflection with index {index}")

        matrix = self.datum.matrix

        if isinstance(x, RootVector):
            value = sum(matrix[index][j] * x.coeffs[j] for j in range(self.datum.rank))
            if value == 0:
                return x
            coeffs = list(x.coeffs)
            coeffs[index] -= value
            return RootVector(coeffs)

        value = x.labels[index]
        if value == 0:
            return x

        labels = tuple(x.labels[i] - value * matrix[i][index] for i in range(self.datum.rank))
        delta = x.delta - value if self.datum.is_affine and index == self.datum.affine_node else x.delta

        return Weight(labels, delta)

    def to_dominant(self, weight: Weight) -> DominantResult:
        current = weight
        steps = 0

        while True:
            index = next((i for i, v in enumerate(current.labels) if v < 0), None)
            if index is None:
                break
            current = self.reflect(index, current)
            steps += 1
            if steps > self.max_steps:
                raise NotInTitsConeError(f"{weight} did not reach the dominant chamber in {self.max_steps} steps")

        zero_labels = [i for i, v in enumerate(current.labels) if v == 0]
        finite = not (self.datum.is_affine and len(zero_labels) == self.datum.rank)

        return DominantResult(current, 0 if zero_labels else (-1) ** steps, finite, steps)

    def stabilizer_poincare(self, weight: Weight) -> Poly:
        """Poincare polynomial of the parabolic subgroup fixing a dominant weight."""
        zero_labels = [i for i, v in enumerate(weight.labels) if v == 0]

        if not zero_labels:
            return Poly.one()
        if self.datum.is_affine and len(zero_labels) == self.datum.rank:
            raise InfiniteStabilizerError(f"the stabilizer of {weight} is infinite")

        result = Poly.one()

        for exponent in self.datum.subdatum(zero_labels).exponents():
            result = result * Poly((1,) * (exponent + 1))

        return result

    def orbit_interval(self, top: Weight, floor: Weight) -> list[OrbitPoint]:
        """Orbit points of a regular dominant ``top`` lying above ``floor``."""
        if not top.is_regular_dominant():
            raise NotRegularDominantError(f"{top} is not regular dominant")
        if not self.datum.dominates(top, floor):
            return []

        points = [OrbitPoint(top, 1, 0)]
        seen = {top}
        frontier = [top]
        length = 0

        while frontier:
            length += 1
            following = []
            for point in frontier:
                for i, value in enumerate(point.labels):
                    if value <= 0:
                        continue
                    image = self.reflect(i, point)
                    # descents only subtract simple roots, so a pruned point never climbs back above floor
                    if image in seen or not self.datum.dominates(image, floor):
                        continue
                    seen.add(image)
                    following.append(image)
                    points.append(OrbitPoint(image, (-1) ** length, length))
            frontier = following

        return points

    def orbit_within(self, weight: Weight, anchor: Weight, depth: int) -> list[Weight]:
        """W-orbit of a dominant weight, restricted to anchor - nu in Q+ of height <= depth."""
        def admissible(nu: Weight) -> bool:
            offset = self.datum.offset(anchor, nu)
            return offset is not None and offset.height <= depth

        if not admissible(weight):
            return []

        seen = {weight}
        frontier = [weight]

        while frontier:
            following = []
            for point in frontier:
                for i, value in enumerate(point.labels):
                    if value <= 0:
                        continue
                    image = self.reflect(i, point)
                    if image not in seen and admissible(image):
                        seen.add(image)
                        following.append(image)
            frontier = following

        return sorted(seen, key=lambda nu: self.datum.offset(anchor, nu).sort_key())

    def apply_word(self, word: tuple[int, ...], x: T) -> T:
        for index in reversed(word):
            x = self.reflect(index, x)

        return x

    def ball(self, radius: int) -> list[WeylElement]:
        """Elements of length at most ``radius`` with their inversion sets S(w)."""
        rho = self.datum.weyl_vector()
        identity = WeylElement((), (), rho)
        elements = [identity]
        seen = {rho}
        frontier = [identity]

        for _ in range(radius):
            following = []
            for element in frontier:
                for i in range(self.datum.rank):
                    image = self.apply_word(element.word, self.datum.simple_root(i))
                    if not image.is_nonnegative():
                        continue
                    rho_image = element.rho_image - self.datum.weight_of(image)
                    if rho_image in seen:
                        continue
                    seen.add(rho_image)
                    successor = WeylElement(element.word + (i,), element.inversions + (image,), rho_image)
                    following.append(successor)
                    elements.append(successor)
                    if len(elements) > self.max_ball_size:
                        raise BallTooLargeError(f"Weyl ball of radius {radius} exceeds {self.max_ball_size} elements")
            frontier = following

        return elements

    def poincare_series(self, elements: list[WeylElement], max_degree: int) -> Poly:
        counts = [0] * (max_degree + 1)

        for element in elements:
            if element.length <= max_degree:
                counts[element.length] += 1

        return Poly(counts)

