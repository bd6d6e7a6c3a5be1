from marshmallow import Schema, fields, post_load
from marshmallow_enum import EnumField
from kmk.config import OutputFormat
from kmk.lie import CartanKind


class JobConfigSchema(Schema):
    class Meta:
        ordered = True

    command = fields.Str()
    algebra = fields.Str(allow_none=True)
    matrix = fields.List(fields.List(fields.Int()), allow_none=True)
    kind = EnumField(CartanKind, by_value=True, allow_none=True)
    checks = fields.List(fields.Str(), allow_none=True)
    weight = fields.List(fields.Int(), allow_none=True)
    delta = fields.Int()
    floor = fields.List(fields.Int(), allow_none=True)
    floor_delta = fields.Int()
    depth = fields.Int(allow_none=True)
    order = fields.Int(allow_none=True)
    t_degree = fields.Int(allow_none=True)
    t_value = fields.Int(allow_none=True)
    level = fields.Int()
    extra_radius = fields.Int()
    function = fields.Bool()
    output_format = EnumField(OutputFormat, by_value=True)
    parallel = fields.Bool()
    verbose = fields.Bool()
    memory_guard_mb = fields.Int()

    @post_load
    def make_obj(self, data, **kwargs):
        from kmk.config import JobConfig

        return JobConfig(**data)
