from marshmallow import post_load, fields
from kmk.schemas import ArtifactSchema


class ErrorArtifactSchema(ArtifactSchema):
    value = fields.Str()
    exit_code = fields.Int()

    @post_load
    def make_obj(self, data, **kwargs):
        from kmk.artifacts import ErrorArtifact

        return ErrorArtifact(**data)
