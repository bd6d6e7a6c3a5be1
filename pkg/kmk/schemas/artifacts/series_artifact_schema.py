from marshmallow import post_load, fields
from kmk.schemas import ArtifactSchema
from kmk.utils.marshmallow.fields import QSeriesField, WeightField


class SeriesArtifactSchema(ArtifactSchema):
    name = fields.Str()
    weight = WeightField(allow_none=True)
    floor = WeightField(allow_none=True)
    value = QSeriesField()

    @post_load
    def make_obj(self, data, **kwargs):
        from kmk.artifacts import SeriesArtifact

        return SeriesArtifact(**data)
