from marshmallow import post_load, fields
from kmk.schemas import ArtifactSchema, MismatchSchema


class CheckArtifactSchema(ArtifactSchema):
    name = fields.Str()
    value = fields.Bool()
    details = fields.Dict(keys=fields.Str())
    mismatch = fields.Nested(MismatchSchema, allow_none=True)

    @post_load
    def make_obj(self, data, **kwargs):
        from kmk.artifacts import CheckArtifact

        return CheckArtifact(**data)
