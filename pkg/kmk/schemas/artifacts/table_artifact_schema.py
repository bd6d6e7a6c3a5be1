from marshmallow import post_load, fields
from kmk.schemas import ArtifactSchema, BaseSchema
from kmk.utils.marshmallow.fields import PolyField, WeightField


class TableRowSchema(BaseSchema):
    class Meta:
        ordered = True

    weight = WeightField()
    offset = fields.List(fields.Int())
    value = PolyField()

    @post_load
    def make_obj(self, data, **kwargs):
        from kmk.artifacts import TableRow

        return TableRow(**data)


class TableArtifactSchema(ArtifactSchema):
    name = fields.Str()
    weight = WeightField()
    depth = fields.Int()
    value = fields.List(fields.Nested(TableRowSchema))

    @post_load
    def make_obj(self, data, **kwargs):
        from kmk.artifacts import TableArtifact

        return TableArtifact(**data)
