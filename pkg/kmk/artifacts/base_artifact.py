from __future__ import annotations
import json
import uuid
from abc import ABC, abstractmethod
from typing import Any
from attr import define, field, Factory
from marshmallow import class_registry
from marshmallow.exceptions import RegistryError


@define
class BaseArtifact(ABC):
    id: str = field(default=Factory(lambda: uuid.uuid4().hex), kw_only=True)
    value: Any = field()
    type: str = field(default=Factory(lambda self: self.__class__.__name__, takes_self=True), kw_only=True)

    @classmethod
    def from_dict(cls, artifact_dict: dict) -> BaseArtifact:
        from kmk.schemas import (
            ErrorArtifactSchema, TableArtifactSchema, SeriesArtifactSchema, CheckArtifactSchema
        )

        class_registry.register("ErrorArtifact", ErrorArtifactSchema)
        class_registry.register("TableArtifact", TableArtifactSchema)
        class_registry.register("SeriesArtifact", SeriesArtifactSchema)
        class_registry.register("CheckArtifact", CheckArtifactSchema)

        try:
            return class_registry.get_class(artifact_dict["type"])().load(artifact_dict)
        except RegistryError:
            raise ValueError("Unsupported artifact type")

    @classmethod
    def from_json(cls, artifact_str: str) -> BaseArtifact:
        return cls.from_dict(json.loads(artifact_str))

    def __str__(self):
        return self.to_json()

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_result(self) -> dict:
        """Serialized form without the random id, so identical runs produce identical output."""
        return {key: value for key, value in self.to_dict().items() if key != "id"}

    @abstractmethod
    def to_text(self) -> str:
        ...

    @abstractmethod
    def to_dict(self) -> dict:
        ...
