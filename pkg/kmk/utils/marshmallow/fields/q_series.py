from marshmallow import fields, ValidationError
from kmk.series.poly import Poly
from kmk.series.q_series import QSeries


class QSeriesField(fields.Field):
    """Array of ascending coefficient arrays, one per power of q."""

    def _serialize(self, value, attr, obj, **kwargs):
        return None if value is None else value.to_lists()

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, list) or not value or not all(isinstance(c, list) for c in value):
            raise ValidationError("A q-series is a nonempty list of coefficient lists.")

        return QSeries(len(value) - 1, tuple(Poly(c) for c in value))
