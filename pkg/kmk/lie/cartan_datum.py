from __future__ import annotations
import logging
from enum import Enum
from fractions import Fraction
from functools import cached_property, reduce
from itertools import combinations
from math import gcd
from typing import TYPE_CHECKING, Iterable, Iterator, Optional, Sequence, Union
import numpy as np
import sympy
from attr import define, field
from kmk.errors import NotGcmError, NotSymmetrizableError, PreconditionViolatedError, UnsupportedTypeError
from kmk.lie.root_slice import RootSlice
from kmk.lie.root_vector import RootVector
from kmk.lie.weight import Rational, Weight, exact

if TYPE_CHECKING:
    from kmk.lie.weyl_group import WeylGroup


class CartanKind(Enum):
    FINITE = "finite"
    UNTWISTED_AFFINE = "untwisted_affine"


def _matrix(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    try:
        result = tuple(tuple(_integer(v) for v in row) for row in rows)
    except TypeError:
        raise NotGcmError("a Cartan matrix must be a list of integer rows")

    if not result or any(len(row) != len(result) for row in result):
        raise NotGcmError("a Cartan matrix must be square and nonempty")

    return result


def _integer(value) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise NotGcmError(f"non-integer Cartan matrix entry {value!r}")

    return int(value)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # stars and bars, in lexicographically decreasing order of the first part
    for bars in combinations(range(total + parts - 1), parts - 1):
        previous = -1
        values = []
        for bar in bars + (total + parts - 1,):
            values.append(bar - previous - 1)
            previous = bar
        yield tuple(values)


@define(frozen=True, slots=False)
class CartanDatum:
    """A symmetrizable generalized Cartan matrix of finite or untwisted affine type.

    Conventions: ``matrix[i][j] = <alpha_j, alpha_i^vee>``, so the labels of a root
    vector ``b`` are ``matrix @ b``. The invariant form is normalized so that long
    roots have square length 2. In affine type, weights use the basis
    ``Lambda_0, ..., Lambda_l, delta`` and ``alpha_p = sum_i A[i][p] Lambda_i + delta``
    for the affine node ``p``.
    """

    matrix: tuple[tuple[int, ...], ...] = field(converter=_matrix)
    symmetrizer: tuple[int, ...] = field(kw_only=True)
    kind: CartanKind = field(kw_only=True)
    marks: Optional[tuple[int, ...]] = field(default=None, kw_only=True)
    affine_node: Optional[int] = field(default=None, kw_only=True)
    name: Optional[str] = field(default=None, kw_only=True, eq=False)

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def is_affine(self) -> bool:
        return self.kind == CartanKind.UNTWISTED_AFFINE

    @property
    def label(self) -> str:
        return self.name or f"{self.kind.value}{list(map(list, self.matrix))}"

    @cached_property
    def weyl(self) -> WeylGroup:
        from kmk.lie.weyl_group import WeylGroup

        return WeylGroup(datum=self)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = set()
        result = []

        for start in range(self.rank):
            if start in seen:
                continue
            stack, component = [start], []
            seen.add(start)
            while stack:
                i = stack.pop()
                component.append(i)
                for j in range(self.rank):
                    if j not in seen and self.matrix[i][j] != 0:
                        seen.add(j)
                        stack.append(j)
            result.append(tuple(sorted(component)))

        return tuple(result)

    @cached_property
    def epsilon(self) -> tuple[Rational, ...]:
        """(alpha_i, alpha_i)/2 with long roots of every component at square length 2."""
        values = [Fraction(0)] * self.rank

        for component in self.components:
            longest = max(self.symmetrizer[i] for i in component)
            for i in component:
                values[i] = Fraction(self.symmetrizer[i], longest)

        return tuple(exact(v) for v in values)

    @cached_property
    def gram(self) -> tuple[tuple[Rational, ...], ...]:
        return tuple(
            tuple(exact(self.epsilon[i] * self.matrix[i][j]) for j in range(self.rank)) for i in range(self.rank)
        )

    @cached_property
    def is_simply_laced(self) -> bool:
        return all(self.matrix[i][j] in (0, -1) for i in range(self.rank) for j in range(self.rank) if i != j)

    @cached_property
    def _solver(self) -> tuple[tuple[int, ...], tuple[tuple[Rational, ...], ...]]:
        # indices of the finite block and the exact inverse of that block
        nodes = tuple(i for i in range(self.rank) if i != self.affine_node)
        block = sympy.Matrix([[self.matrix[i][j] for j in nodes] for i in nodes]).inv()
        inverse = tuple(
            tuple(exact(Fraction(int(block[r, c].p), int(block[r, c].q))) for c in range(len(nodes)))
            for r in range(len(nodes))
        )

        return nodes, inverse

    def form_coordinates(self, x: Union[Weight, RootVector]) -> tuple[tuple[Rational, ...], Rational]:
        """Coordinates (b, s) with x = sum b_i alpha_i + s Lambda_p (s is the level)."""
        if isinstance(x, RootVector):
            return x.coeffs, 0

        nodes, inverse = self._solver
        b = [0] * self.rank
        rhs = list(x.labels)

        if self.is_affine:
            p = self.affine_node
            b[p] = x.delta
            rhs = [x.labels[i] - self.matrix[i][p] * x.delta for i in range(self.rank)]

        for r, i in enumerate(nodes):
            b[i] = exact(sum(inverse[r][c] * rhs[j] for c, j in enumerate(nodes)))

        level = 0
        if self.is_affine:
            p = self.affine_node
            level = exact(x.labels[p] - sum(self.matrix[p][j] * b[j] for j in range(self.rank)))

        return tuple(b), level

    def root_of(self, weight: Weight) -> Optional[RootVector]:
        """The root-lattice element equal to ``weight``, or None if there is none."""
        b, level = self.form_coordinates(weight)

        if level != 0 or not all(isinstance(v, int) for v in b):
            return None

        return RootVector(b)

    def weight_of(self, root: RootVector) -> Weight:
        labels = tuple(sum(self.matrix[i][j] * root.coeffs[j] for j in range(self.rank)) for i in range(self.rank))

        return Weight(labels, root.coeffs[self.affine_node] if self.is_affine else 0)

    def offset(self, upper: Weight, lower: Weight) -> Optional[RootVector]:
        """upper - lower as an element of Q+, or None when lower is not below upper."""
        root = self.root_of(upper - lower)

        return root if root is not None and root.is_nonnegative() else None

    def dominates(self, upper: Weight, lower: Weight) -> bool:
        return self.offset(upper, lower) is not None

    def level(self, weight: Weight) -> Rational:
        return self.form_coordinates(weight)[1]

    def bilinear(self, x: Union[Weight, RootVector], y: Union[Weight, RootVector]) -> Rational:
        bx, sx = self.form_coordinates(x)
        by, sy = self.form_coordinates(y)
        total = sum(
            bx[i] * self.gram[i][j] * by[j]
            for i in range(self.rank) if bx[i]
            for j in range(self.rank) if by[j]
        )

        if self.is_affine:
            p = self.affine_node
            total += self.epsilon[p] * (sx * by[p] + sy * bx[p])

        return exact(total)

    def pairing(self, x: Union[Weight, RootVector], index: int) -> Rational:
        """<x, alpha_index^vee>."""
        if isinstance(x, Weight):
            return x.labels[index]

        return sum(self.matrix[index][j] * x.coeffs[j] for j in range(self.rank))

    def simple_root(self, index: int) -> RootVector:
        return RootVector.simple(self.rank, index)

    def zero_weight(self) -> Weight:
        return Weight.zero(self.rank)

    def weyl_vector(self) -> Weight:
        return Weight((1,) * self.rank)

    rho = weyl_vector

    def fundamental_weight(self, index: int) -> Weight:
        return Weight.fundamental(self.rank, index)

    def delta(self) -> RootVector:
        self._require_affine()

        return RootVector(self.marks)

    def delta_weight(self, multiple: Rational = 1) -> Weight:
        self._require_affine()

        return Weight((0,) * self.rank, multiple)

    @cached_property
    def delta_height(self) -> int:
        self._require_affine()

        return sum(self.marks)

    def is_dominant(self, weight: Weight) -> bool:
        return weight.is_dominant()

    def reflect(self, index: int, x):
        return self.weyl.reflect(index, x)

    @cached_property
    def _finite_positive_roots(self) -> tuple[RootVector, ...]:
        simple = [self.simple_root(i) for i in range(self.rank)]
        seen = set(simple)
        frontier = list(simple)

        while frontier:
            following = []
            for root in frontier:
                for i in range(self.rank):
                    if root.coeffs[i] == root.height:
                        continue
                    image = self.weyl.reflect(i, root)
                    if image not in seen:
                        seen.add(image)
                        following.append(image)
            frontier = following

        return tuple(sorted(seen, key=RootVector.sort_key))

    @cached_property
    def _root_cache(self) -> dict[int, RootSlice]:
        return {}

    def roots_up_to(self, height_bound: int) -> RootSlice:
        if height_bound < 0:
            raise ValueError("height bound must be nonnegative")
        if height_bound in self._root_cache:
            return self._root_cache[height_bound]

        if self.is_affine:
            roots = self._affine_roots(height_bound)
        else:
            roots = RootSlice(
                height_bound, tuple(r for r in self._finite_positive_roots if r.height <= height_bound)
            )

        logging.getLogger("kmk").debug("roots of %s up to height %d: %d", self.label, height_bound, len(roots))
        self._root_cache[height_bound] = roots

        return roots

    def _affine_roots(self, height_bound: int) -> RootSlice:
        p = self.affine_node
        delta = self.delta()
        lifted = [
            RootVector(beta.coeffs[:p] + (0,) + beta.coeffs[p:]) for beta in self.finite_part().positive_roots()
        ]
        top = max(beta.height for beta in lifted)
        real, imaginary = [], []

        # k delta - beta stays within the bound up to k = (H + ht theta) // ht delta
        for k in range((height_bound + top) // self.delta_height + 1):
            shift = delta * k
            if k >= 1 and shift.height <= height_bound:
                imaginary.append(shift)
            for beta in lifted:
                for root in (shift + beta, shift - beta) if k >= 1 else (beta,):
                    if root.height <= height_bound:
                        real.append(root)

        return RootSlice(
            height_bound,
            tuple(sorted(real, key=RootVector.sort_key)),
            imaginary_roots=tuple(imaginary),
            imaginary_multiplicity=self.rank - 1
        )

    def positive_roots(self) -> tuple[RootVector, ...]:
        self._require_finite()

        return self._finite_positive_roots

    def highest_root(self) -> RootVector:
        return max(self.positive_roots(), key=RootVector.sort_key)

    def highest_root_weight(self) -> Weight:
        return self.weight_of(self.highest_root())

    def coroot_height(self, root: RootVector) -> Rational:
        """(rho, root^vee)."""
        half_length = Fraction(self.bilinear(root, root)) / 2

        return exact(sum(Fraction(c) * self.epsilon[i] / half_length for i, c in enumerate(root.coeffs)))

    def coroot_height_counts(self) -> dict[int, int]:
        self._require_finite()
        counts: dict[int, int] = {}

        for root in self.positive_roots():
            height = self.coroot_height(root)
            counts[height] = counts.get(height, 0) + 1

        return dict(sorted(counts.items()))

    def exponents(self) -> list[int]:
        counts = self.coroot_height_counts()
        result = []

        for j in counts:
            result += [j] * (counts[j] - counts.get(j + 1, 0))

        return sorted(result)

    def degrees(self) -> list[int]:
        return [e + 1 for e in self.exponents()]

    def subdatum(self, nodes: Iterable[int]) -> CartanDatum:
        nodes = sorted(nodes)

        return validate([[self.matrix[i][j] for j in nodes] for i in nodes])

    def finite_part(self, node: Optional[int] = None) -> CartanDatum:
        self._require_affine()
        node = self.affine_node if node is None else node

        if node == self.affine_node:
            return self._default_finite_part

        return self.subdatum(i for i in range(self.rank) if i != node)

    @cached_property
    def _default_finite_part(self) -> CartanDatum:
        return self.subdatum(i for i in range(self.rank) if i != self.affine_node)

    def restrict(self, weight: Weight, node: Optional[int] = None) -> Weight:
        """Drop the label at ``node`` (default: the affine node) and the delta coefficient."""
        node = self.affine_node if node is None else node

        return Weight(v for i, v in enumerate(weight.labels) if i != node)

    def offsets_up_to(self, depth: int) -> Iterator[RootVector]:
        """All of Q+ up to height ``depth``, in increasing height."""
        for height in range(depth + 1):
            for coeffs in sorted(_compositions(height, self.rank)):
                yield RootVector(coeffs)

    def dominant_cone(self, weight: Weight, depth: int) -> list[tuple[RootVector, Weight]]:
        """Dominant mu with weight - mu in Q+ of height at most ``depth``."""
        result = []

        for beta in self.offsets_up_to(depth):
            mu = weight - self.weight_of(beta)
            if mu.is_dominant():
                result.append((beta, mu))

        return result

    def _require_affine(self) -> None:
        if not self.is_affine:
            raise PreconditionViolatedError(f"{self.label} is not of affine type")

    def _require_finite(self) -> None:
        if self.is_affine:
            raise PreconditionViolatedError(f"{self.label} is not of finite type")


def _symmetrizer(rows: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    n = len(rows)
    d: list[Optional[Fraction]] = [None] * n

    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue, component = [start], [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if j == i or rows[i][j] == 0:
                    continue
                value = d[i] * rows[i][j] / rows[j][i]
                if d[j] is None:
                    d[j] = value
                    queue.append(j)
                    component.append(j)
                elif d[j] != value:
                    raise NotSymmetrizableError("the Cartan matrix is not symmetrizable")

        scale = reduce(lambda a, b: a * b // gcd(a, b), (d[i].denominator for i in component), 1)
        common = reduce(gcd, (int(d[i] * scale) for i in component))
        for i in component:
            d[i] = Fraction(int(d[i] * scale) // common)

    symmetrizer = tuple(int(v) for v in d)
    scaled = np.diag(symmetrizer) @ np.array(rows, dtype=np.int64)

    if not np.array_equal(scaled, scaled.T):
        raise NotSymmetrizableError("the Cartan matrix is not symmetrizable")

    return symmetrizer


def _positive_definite(matrix: sympy.Matrix) -> bool:
    return all(matrix[:k, :k].det() > 0 for k in range(1, matrix.rows + 1))


def _delete(matrix: sympy.Matrix, node: int) -> sympy.Matrix:
    keep = [i for i in range(matrix.rows) if i != node]

    return matrix.extract(keep, keep)


def _primitive_kernel(matrix: sympy.Matrix) -> tuple[int, ...]:
    (vector,) = matrix.nullspace()
    denominators = reduce(lambda a, b: a * b // gcd(a, b), (int(sympy.fraction(v)[1]) for v in vector), 1)
    values = [int(v * denominators) for v in vector]
    common = reduce(gcd, values)
    values = [v // common for v in values]

    if values[0] < 0:
        values = [-v for v in values]
    if any(v <= 0 for v in values):
        raise UnsupportedTypeError("affine kernel is not a positive vector")

    return tuple(values)


def validate(
        matrix: Sequence[Sequence[int]],
        kind_hint: Optional[Union[str, CartanKind]] = None,
        name: Optional[str] = None
) -> CartanDatum:
    """Check a generalized Cartan matrix and classify it as finite or untwisted affine."""
    rows = _matrix(matrix)
    array = np.array(rows, dtype=np.int64)
    off_diagonal = array[~np.eye(len(rows), dtype=bool)]

    if not np.all(np.diag(array) == 2):
        raise NotGcmError("diagonal entries of a Cartan matrix must equal 2")
    if np.any(off_diagonal > 0):
        raise NotGcmError("off-diagonal entries of a Cartan matrix must be nonpositive")
    if not np.array_equal(array == 0, (array == 0).T):
        raise NotGcmError("the zero pattern of a Cartan matrix must be symmetric")

    symmetrizer = _symmetrizer(rows)
    full = sympy.Matrix(rows)

    if _positive_definite(full):
        datum = CartanDatum(rows, symmetrizer=symmetrizer, kind=CartanKind.FINITE, name=name)
    elif full.det() == 0 and all(_positive_definite(_delete(full, k)) for k in range(len(rows))):
        marks = _primitive_kernel(full)
        datum = None
        for node in (k for k in range(len(rows)) if marks[k] == 1):
            candidate = CartanDatum(
                rows,
                symmetrizer=symmetrizer,
                kind=CartanKind.UNTWISTED_AFFINE,
                marks=marks,
                affine_node=node,
                name=name
            )
            theta = candidate.finite_part().highest_root()
            if theta.coeffs == marks[:node] + marks[node + 1:]:
                datum = candidate
                break
        if datum is None:
            raise UnsupportedTypeError("twisted affine Cartan matrices are not supported")
    else:
        raise UnsupportedTypeError("indefinite Cartan matrices are not supported")

    if kind_hint is not None and CartanKind(kind_hint) != datum.kind:
        raise UnsupportedTypeError(f"expected a {CartanKind(kind_hint).value} matrix, got {datum.kind.value}")

    return datum
