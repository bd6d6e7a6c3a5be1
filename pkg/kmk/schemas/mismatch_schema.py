from marshmallow import post_load, fields
from kmk.schemas import BaseSchema
from kmk.utils.marshmallow.fields import PolyField


class MismatchSchema(BaseSchema):
    class Meta:
        ordered = True

    expected = PolyField()
    actual = PolyField()
    q_order = fields.Int(allow_none=True)
    offset = fields.List(fields.Int(), allow_none=True)
    t_degree = fields.Int(allow_none=True)
    label = fields.Str(allow_none=True)

    @post_load
    def make_obj(self, data, **kwargs):
        from kmk.utils.comparison import Mismatch

        return Mismatch(**data)
