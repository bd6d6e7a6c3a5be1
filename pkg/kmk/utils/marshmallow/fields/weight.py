from fractions import Fraction
from marshmallow import fields, ValidationError
from kmk.lie.weight import Weight, exact


def _number(value):
    return value if isinstance(value, int) else str(value)


class WeightField(fields.Field):
    """``{"labels": [...], "delta": c}``; non-integral rationals are written as ``"p/q"`` strings."""

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None

        return {"labels": [_number(v) for v in value.labels], "delta": _number(value.delta)}

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return Weight(
                (exact(Fraction(v)) for v in value["labels"]),
                exact(Fraction(value.get("delta", 0)))
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            raise ValidationError("A weight needs a labels list and an optional delta coefficient.")
