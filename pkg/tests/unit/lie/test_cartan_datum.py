import random
import pytest
from kmk.errors import NotGcmError, PreconditionViolatedError, UnsupportedTypeError
from kmk.lie import CartanKind, RootVector, Weight, from_name, validate


class TestCartanDatum:
    def test_validate_rank_one(self):
        datum = validate([[2]])

        assert datum.kind == CartanKind.FINITE
        assert datum.symmetrizer == (1,)

    def test_validate_affine(self):
        datum = validate([[2, -2], [-2, 2]])

        assert datum.kind == CartanKind.UNTWISTED_AFFINE
        assert datum.marks == (1, 1)
        assert datum.affine_node == 0

    def test_validate_finite(self):
        assert validate([[2, -1], [-1, 2]]).kind == CartanKind.FINITE

    def test_validate_rejects_non_gcm(self):
        with pytest.raises(NotGcmError):
            validate([[3]])

        with pytest.raises(NotGcmError):
            validate([[2, 1], [1, 2]])

        with pytest.raises(NotGcmError):
            validate([[2, -1], [0, 2]])

    def test_validate_rejects_indefinite_and_twisted(self):
        with pytest.raises(UnsupportedTypeError):
            validate([[2, -3], [-3, 2]])

        with pytest.raises(UnsupportedTypeError):
            validate([[2, -4], [-1, 2]])

    def test_validate_kind_hint(self):
        with pytest.raises(UnsupportedTypeError):
            validate([[2, -2], [-2, 2]], kind_hint="finite")

        assert validate([[2, -2], [-2, 2]], kind_hint=CartanKind.UNTWISTED_AFFINE).is_affine

    def test_catalog_names(self):
        assert from_name("A2").label == "A2"
        assert from_name("G2~").marks == (1, 3, 2)
        assert from_name("C2~").delta_height == 4
        assert from_name("A2~").delta_height == 3

        with pytest.raises(UnsupportedTypeError):
            from_name("H3")

        with pytest.raises(UnsupportedTypeError):
            from_name("B1")

    def test_bilinear(self):
        a2 = from_name("A2")
        affine = from_name("A1~")

        assert a2.bilinear(a2.simple_root(0), a2.simple_root(0)) == 2
        assert a2.bilinear(a2.simple_root(0), a2.simple_root(1)) == -1
        assert affine.bilinear(affine.delta(), affine.simple_root(0)) == 0
        assert affine.bilinear(affine.delta_weight(), affine.fundamental_weight(0)) == 1
        assert a2.coroot_height(a2.highest_root()) == 2

    def test_bilinear_is_symmetric(self):
        datum = from_name("G2~")
        rng = random.Random(5)

        for _ in range(20):
            x = Weight([rng.randint(-2, 2) for _ in range(3)], rng.randint(-2, 2))
            y = Weight([rng.randint(-2, 2) for _ in range(3)], rng.randint(-2, 2))

            assert datum.bilinear(x, y) == datum.bilinear(y, x)

    def test_weyl_vector(self):
        assert from_name("A2").weyl_vector() == Weight((1, 1))
        assert from_name("A1~").weyl_vector() == Weight((1, 1), 0)

    def test_levels(self):
        affine = from_name("A1~")

        assert affine.level(affine.fundamental_weight(0)) == 1
        assert affine.level(affine.weyl_vector()) == 2
        assert affine.level(affine.delta_weight()) == 0

    def test_roots_up_to_finite(self):
        roots = from_name("A2").roots_up_to(2)

        assert set(roots.real_roots) == {RootVector((1, 0)), RootVector((0, 1)), RootVector((1, 1))}
        assert roots.imaginary_roots == ()

    def test_roots_up_to_affine(self):
        affine = from_name("A1~")
        low = affine.roots_up_to(2)
        high = affine.roots_up_to(3)

        assert set(low.real_roots) == {RootVector((1, 0)), RootVector((0, 1))}
        assert low.imaginary_roots == (RootVector((1, 1)),)
        assert low.multiplicity(RootVector((1, 1))) == 1
        assert set(high.real_roots) - set(low.real_roots) == {RootVector((2, 1)), RootVector((1, 2))}

    def test_affine_real_roots_are_reflection_closed(self):
        affine = from_name("A2~")
        roots = affine.roots_up_to(6)

        for root in roots.real_roots:
            assert affine.bilinear(root, root) == 2
            for i in range(affine.rank):
                image = affine.reflect(i, root)
                if image.is_positive() and image.height <= 6:
                    assert image in roots.real_roots

    @pytest.mark.parametrize("algebra,height_bound", [("A1~", 3), ("A1~", 7), ("A2~", 5), ("C2~", 6), ("G2~", 8)])
    def test_affine_real_roots_match_reflection_orbits(self, algebra, height_bound):
        affine = from_name(algebra)
        simple = [affine.simple_root(i) for i in range(affine.rank)]
        expected = set(simple)
        frontier = list(simple)

        while frontier:
            following = []
            for root in frontier:
                for i in range(affine.rank):
                    image = affine.reflect(i, root)
                    if image.is_positive() and image.height <= height_bound and image not in expected:
                        expected.add(image)
                        following.append(image)
            frontier = following

        assert set(affine.roots_up_to(height_bound).real_roots) == expected

    def test_affine_roots_beyond_one_delta(self):
        affine = from_name("A2~")
        roots = affine.roots_up_to(5)

        assert {RootVector((2, 1, 1)), RootVector((2, 2, 1)), RootVector((2, 1, 2))} <= set(roots.real_roots)
        assert RootVector((2, 1, 1)) not in affine.roots_up_to(3).real_roots

    def test_finite_slice_covers_positive_roots(self):
        datum = from_name("B2")

        assert len(datum.roots_up_to(10).real_roots) == 4
        assert set(datum.roots_up_to(10).real_roots) == set(datum.positive_roots())

    def test_exponents(self):
        assert from_name("A1").coroot_height_counts() == {1: 1}
        assert from_name("A2").coroot_height_counts() == {1: 2, 2: 1}
        assert from_name("A2").exponents() == [1, 2]
        assert from_name("A2").degrees() == [2, 3]
        assert from_name("G2").exponents() == [1, 5]
        assert from_name("B2").exponents() == [1, 3]
        assert from_name("A3").exponents() == [1, 2, 3]
        assert from_name("E6").exponents() == [1, 4, 5, 7, 8, 11]

    def test_highest_root(self):
        assert from_name("A2").highest_root() == RootVector((1, 1))
        assert from_name("G2").highest_root() == RootVector((3, 2))
        assert from_name("A2").highest_root_weight() == Weight((1, 1))

    def test_root_weight_round_trip(self):
        rng = random.Random(3)

        for name in ("A2", "A1~", "C2~"):
            datum = from_name(name)
            for _ in range(20):
                beta = RootVector([rng.randint(-3, 3) for _ in range(datum.rank)])
                assert datum.root_of(datum.weight_of(beta)) == beta

    def test_root_of_rejects_nonlattice(self):
        a2 = from_name("A2")

        assert a2.root_of(Weight((1, 0))) is None
        assert a2.offset(Weight((1, 1)), Weight((2, 2))) is None

    def test_dominant_cone(self):
        affine = from_name("A1~")
        cone = affine.dominant_cone(affine.zero_weight(), 2)

        assert cone == [(RootVector((0, 0)), Weight((0, 0))), (RootVector((1, 1)), Weight((0, 0), -1))]

    def test_finite_part_and_restrict(self):
        affine = from_name("A2~")
        weight = Weight((1, 2, 0), 3)

        assert affine.finite_part().matrix == from_name("A2").matrix
        assert affine.restrict(weight) == Weight((2, 0))
        assert affine.restrict(weight, 1) == Weight((1, 0))

    def test_delta_requires_affine(self):
        with pytest.raises(PreconditionViolatedError):
            from_name("A2").delta()

        with pytest.raises(PreconditionViolatedError):
            from_name("A1~").positive_roots()
