import random
import pytest
from kmk.errors import AnchorNotLatticeCompatibleError, HeightBoundExceededError, NotInvertibleError
from kmk.lie import RootVector, Weight, from_name
from kmk.series import FormalSeries, Poly, QSeries, constant_term, fs_invertible_inverse, fs_mul


class TestFormalSeries:
    @pytest.fixture
    def a1(self):
        return from_name("A1")

    @pytest.fixture
    def a2(self):
        return from_name("A2")

    @pytest.fixture
    def affine(self):
        return from_name("A1~")

    def series(self, datum, depth, terms):
        return FormalSeries(
            datum=datum,
            anchor=datum.zero_weight(),
            depth=depth,
            terms={RootVector(beta): Poly(c) for beta, c in terms.items()}
        )

    def test_multiplicative_identity(self, a2):
        a = self.series(a2, 3, {(0, 0): (1,), (1, 0): (0, 2), (1, 1): (-1, 1)})

        assert fs_mul(a, FormalSeries.one(a2, 3)) == a

    def test_geometric_inverse(self, a1):
        a = self.series(a1, 4, {(0,): (1,), (1,): (-1,)})
        inverse = a.inverse()

        assert inverse.terms == {RootVector((k,)): Poly.one() for k in range(5)}
        assert (a * inverse).terms == {RootVector((0,)): Poly.one()}

    def test_delta_factor_expansion(self, a1):
        a = self.series(a1, 2, {(0,): (1,), (1,): (-1,)})
        b = self.series(a1, 2, {(0,): (1,), (1,): (0, 1), (2,): (0, 0, 1)})

        assert (a * b).terms == {
            RootVector((0,)): Poly.one(),
            RootVector((1,)): Poly((-1, 1)),
            RootVector((2,)): Poly((0, -1, 1))
        }

    def test_inverse_of_t_factor(self, a1):
        inverse = fs_invertible_inverse(self.series(a1, 2, {(0,): (1,), (1,): (0, -1)}))

        assert inverse.terms == {
            RootVector((0,)): Poly.one(),
            RootVector((1,)): Poly.t(),
            RootVector((2,)): Poly((0, 0, 1))
        }

    def test_inverse_needs_unit(self, a1):
        with pytest.raises(NotInvertibleError):
            self.series(a1, 2, {(0,): (2,), (1,): (1,)}).inverse()

    def test_inverse_negates_anchor(self, a2):
        rho = a2.weyl_vector()

        assert FormalSeries.one(a2, 2, anchor=rho).inverse().anchor == -rho

    def test_constant_term_filters_delta_powers(self, affine):
        f = self.series(affine, 2, {(0, 0): (1,), (0, 1): (1,), (1, 1): (0, 1)})

        assert constant_term(f).to_lists() == [[1], [0, 1]]

    def test_constant_term_of_pure_delta_series(self, affine):
        series = QSeries.from_coefficients(3, [1, Poly.t(), Poly((1, 1)), 0])

        assert FormalSeries.from_qseries(affine, series, 6).constant_term() == series

    def test_constant_term_needs_level_zero(self, affine):
        anchored = FormalSeries.one(affine, 2, anchor=affine.fundamental_weight(0))

        with pytest.raises(AnchorNotLatticeCompatibleError):
            anchored.constant_term()

    def test_coefficient_at(self, a2):
        rho = a2.weyl_vector()
        f = FormalSeries(
            datum=a2, anchor=rho, depth=1, terms={RootVector((1, 0)): Poly.t(), RootVector((0, 0)): Poly.one()}
        )

        assert f.coefficient_at(rho) == Poly.one()
        assert f.coefficient_at(Weight((-1, 2))) == Poly.t()
        assert f.coefficient_at(Weight((2, 2))).is_zero()

        with pytest.raises(HeightBoundExceededError):
            f.coefficient_at(Weight((-1, -1)))

    def test_terms_outside_depth_rejected(self, a1):
        with pytest.raises(ValueError):
            self.series(a1, 1, {(2,): (1,)})

        with pytest.raises(ValueError):
            self.series(a1, 1, {(-1,): (1,)})

    def test_zero_terms_dropped(self, a1):
        assert self.series(a1, 1, {(0,): (), (1,): (0, 0)}).is_zero()

    def test_rebase_keeps_weights(self, a2):
        rho = a2.weyl_vector()
        f = FormalSeries(datum=a2, anchor=a2.zero_weight(), depth=2, terms={RootVector((1, 1)): Poly.t()})
        lifted = f.rebase(rho)

        assert lifted.anchor == rho
        assert lifted.depth == 4
        assert lifted.weights() == f.weights()

        with pytest.raises(AnchorNotLatticeCompatibleError):
            lifted.rebase(a2.zero_weight())

    def test_add_aligns_anchors(self, a2):
        rho = a2.weyl_vector()
        total = FormalSeries.one(a2, 4, anchor=rho) + FormalSeries.one(a2, 2)

        assert total.anchor == rho
        assert total.weights() == [(rho, Poly.one()), (a2.zero_weight(), Poly.one())]

    def test_shift(self, a2):
        rho = a2.weyl_vector()

        assert FormalSeries.one(a2, 2).shift(rho).anchor == rho

    def test_truncate(self, a1):
        f = self.series(a1, 3, {(0,): (1,), (3,): (1,)})

        assert f.truncate(2).terms == {RootVector((0,)): Poly.one()}

        with pytest.raises(HeightBoundExceededError):
            f.truncate(4)

    def test_multiply_root_series_needs_reach(self, a1):
        with pytest.raises(HeightBoundExceededError):
            FormalSeries.one(a1, 3).multiply_root_series(RootVector((1,)), QSeries.one(2))

    def test_t_specializations(self, a1):
        f = self.series(a1, 2, {(0,): (1,), (1,): (-1, 1), (2,): (0, -1, 1)})

        assert f.evaluate_t(1).terms == {RootVector((0,)): Poly.one()}
        assert f.truncate_t(0).terms == {RootVector((0,)): Poly.one(), RootVector((1,)): Poly((-1,))}

    def test_truncation_coherence(self, a2):
        rng = random.Random(11)

        for _ in range(20):
            a, b = (
                self.series(
                    a2, 4,
                    {(rng.randint(0, 2), rng.randint(0, 2)): (rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(4)}
                )
                for _ in range(2)
            )

            assert (a * b).truncate(2) == a.truncate(2) * b.truncate(2)
            assert (a + b).truncate(3) == a.truncate(3) + b.truncate(3)
            assert (a * b) == (b * a)
