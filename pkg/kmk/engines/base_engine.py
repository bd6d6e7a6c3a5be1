from __future__ import annotations
import logging
from abc import ABC
from typing import TYPE_CHECKING
from attr import define, field
from kmk.errors import PreconditionViolatedError

if TYPE_CHECKING:
    from kmk.lie import CartanDatum


@define
class BaseEngine(ABC):
    datum: CartanDatum = field(kw_only=True)

    @property
    def logger(self) -> logging.Logger:
        return logging.getLogger("kmk")

    def require_affine(self) -> None:
        if not self.datum.is_affine:
            raise PreconditionViolatedError(f"{self.datum.label} is not an untwisted affine algebra")

    def require_finite(self) -> None:
        if self.datum.is_affine:
            raise PreconditionViolatedError(f"{self.datum.label} is not of finite type")
