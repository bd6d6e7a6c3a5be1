from attr import define, field
from kmk.artifacts import BaseArtifact


@define(frozen=True)
class ErrorArtifact(BaseArtifact):
    value: str = field()
    exit_code: int = field(default=1, kw_only=True)

    def to_text(self) -> str:
        return self.value

    def to_dict(self) -> dict:
        from kmk.schemas import ErrorArtifactSchema

        return dict(ErrorArtifactSchema().dump(self))
