from typing import Any, Optional
from attr import define, field
from kmk.artifacts import BaseArtifact
from kmk.utils.comparison import Mismatch


@define(frozen=True)
class CheckArtifact(BaseArtifact):
    """Outcome of an identity check; ``value`` is True when every compared coefficient agreed."""

    value: bool = field()
    name: str = field(kw_only=True)
    details: dict[str, Any] = field(factory=dict, kw_only=True)
    mismatch: Optional[Mismatch] = field(default=None, kw_only=True)

    @property
    def passed(self) -> bool:
        return self.value

    def to_text(self) -> str:
        status = "pass" if self.value else f"FAIL ({self.mismatch})"

        return f"{self.name}: {status}"

    def to_dict(self) -> dict:
        from kmk.schemas import CheckArtifactSchema

        return dict(CheckArtifactSchema().dump(self))
