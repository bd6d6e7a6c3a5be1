from __future__ import annotations
from typing import Callable, Optional
from attr import define, field
from kmk.artifacts import CheckArtifact
from kmk.errors import ConfigError
from kmk.events import FinishCheckEvent
from kmk.lie import Weight
from kmk.tasks import BaseTask


@define
class VerifyTask(BaseTask):
    CHECKS = (
        "dellm", "prop61", "macdonald", "level0", "level1", "stembridge", "tensor-minus-one",
        "degrees", "highest-root", "inversion", "support", "multiplicities", "string-routes", "rho-character"
    )

    check: str = field(kw_only=True)
    weight: Optional[Weight] = field(default=None, kw_only=True)
    depth: Optional[int] = field(default=None, kw_only=True)
    order: Optional[int] = field(default=None, kw_only=True)
    t_degree: Optional[int] = field(default=None, kw_only=True)
    t_value: Optional[int] = field(default=None, kw_only=True)
    level: int = field(default=1, kw_only=True)
    extra_radius: int = field(default=0, kw_only=True)

    @check.validator
    def validate_check(self, _, check: str) -> None:
        if check not in self.CHECKS:
            raise ValueError(f"unknown check {check!r}")

    def run(self) -> CheckArtifact:
        return self._dispatch()[self.check]()

    def after_run(self) -> None:
        self.structure.publish_event(FinishCheckEvent(check=self.output))

    def _dispatch(self) -> dict[str, Callable[[], CheckArtifact]]:
        kostka = self.structure.kostka_engine
        hall_littlewood = self.structure.hall_littlewood_engine

        return {
            "dellm": lambda: hall_littlewood.verify_dellm(self._weight(), self._required("depth"), self.t_value),
            "prop61": lambda: kostka.verify_prop61(self._weight()),
            "macdonald": lambda: self.structure.affine_string_engine.macdonald_identity_check(
                self._required("t_degree"), self._required("depth"), self.extra_radius
            ),
            "level0": lambda: self.structure.affine_string_engine.level0_check(self._required("order")),
            "level1": lambda: self.structure.affine_string_engine.level1_check(self._required("order")),
            "stembridge": lambda: hall_littlewood.verify_stembridge(
                self._weight(), self._required("depth"), self.t_degree
            ),
            "tensor-minus-one": lambda: hall_littlewood.verify_tensor_minus_one(self._weight()),
            "degrees": lambda: kostka.verify_degrees(self.level),
            "highest-root": lambda: kostka.verify_highest_root(),
            "inversion": lambda: hall_littlewood.verify_kostka_inversion(self._weight(), self._required("depth")),
            "support": lambda: hall_littlewood.verify_support(self._weight(), self._required("depth")),
            "multiplicities": lambda: kostka.verify_multiplicities(self._weight(), self._required("depth")),
            "string-routes": lambda: self.structure.affine_string_engine.verify_string_routes(
                self._weight(), self._required("order"), self.depth
            ),
            "rho-character": lambda: hall_littlewood.verify_rho_character(self._required("depth"))
        }

    def _weight(self) -> Weight:
        return self._required("weight")

    def _required(self, name: str):
        value = getattr(self, name)

        if value is None:
            raise ConfigError(f"check {self.check!r} needs --{name.replace('_', '-')}")

        return value
