from marshmallow import fields, ValidationError
from kmk.series.poly import Poly


class PolyField(fields.Field):
    """Ascending integer coefficient array."""

    def _serialize(self, value, attr, obj, **kwargs):
        return None if value is None else value.to_list()

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in value):
            raise ValidationError("A polynomial is a list of integer coefficients.")

        return Poly(value)
