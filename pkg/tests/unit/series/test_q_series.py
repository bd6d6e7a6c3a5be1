import pytest
from kmk.errors import NotInvertibleError
from kmk.series import Poly, QSeries, delta_ratio, negative_binomial, pochhammer


class TestQSeries:
    def test_pochhammer_euler(self):
        assert pochhammer(0, 3).to_lists() == [[1], [-1], [-1], []]

    def test_pochhammer_with_t(self):
        assert pochhammer(2, 2).to_lists() == [[1], [0, 0, -1], [0, 0, -1]]

    def test_pochhammer_order_zero(self):
        assert pochhammer(3, 0) == QSeries.one(0)

    def test_pochhammer_rejects_negative_power(self):
        with pytest.raises(ValueError):
            pochhammer(-1, 2)

    def test_partition_numbers(self):
        partitions = pochhammer(0, 6).inverse()

        assert [c.constant_term for c in partitions.coefficients] == [1, 1, 2, 3, 5, 7, 11]

    def test_inverse_round_trip(self):
        series = pochhammer(1, 4) * pochhammer(2, 4)

        assert series * series.inverse() == QSeries.one(4)
        assert series / series == QSeries.one(4)

    def test_inverse_needs_unit(self):
        with pytest.raises(NotInvertibleError):
            QSeries.from_coefficients(2, [Poly.t(), 1]).inverse()

    def test_negative_binomial(self):
        assert negative_binomial(2, 3).to_lists() == [[1], [0, 2], [0, 0, 3], [0, 0, 0, 4]]
        assert negative_binomial(0, 2) == QSeries.one(2)

    def test_delta_ratio(self):
        assert delta_ratio(1, 2).to_lists() == [[1], [-1, 1], [0, -1, 1]]
        assert delta_ratio(1, 3).evaluate_t(1) == QSeries.one(3)

    def test_mixed_orders_truncate_to_the_smaller(self):
        total = QSeries.one(4) + QSeries.one(2)

        assert total.order == 2
        assert total.to_lists() == [[2], [], []]

    def test_monomial_and_coefficient(self):
        series = QSeries.monomial(2, Poly.t(), 3)

        assert series.coefficient(2) == Poly.t()
        assert series.coefficient(1).is_zero()
        assert series.coefficient(7).is_zero()
        assert QSeries.monomial(5, Poly.t(), 3).is_zero()

    def test_power(self):
        series = QSeries.from_coefficients(3, [1, 1])

        assert (series ** 2).to_lists() == [[1], [2], [1], []]
        assert series ** -1 == series.inverse()

    def test_truncate(self):
        assert pochhammer(0, 5).truncate(3) == pochhammer(0, 3)

        with pytest.raises(ValueError):
            pochhammer(0, 2).truncate(3)

    def test_validators(self):
        with pytest.raises(ValueError):
            QSeries(2, (Poly.one(),))

        with pytest.raises(ValueError):
            QSeries(-1, ())

    def test_str(self):
        assert str(QSeries.from_coefficients(2, [1, Poly.t()])) == "1 + (t)*q^1 + O(q^3)"
