from __future__ import annotations
from typing import Optional
from attr import define, field, Factory
from decouple import config
from kmk.config import OutputFormat
from kmk.errors import ConfigError, ResourceGuardError
from kmk.lie import CartanDatum, CartanKind, Weight, from_name, validate

COMMANDS = ("kostka", "hl", "string", "verify")


def _check_names(value) -> Optional[tuple[str, ...]]:
    if value is None or isinstance(value, tuple):
        return value

    return (value,) if isinstance(value, str) else tuple(value)


@define(frozen=True)
class JobConfig:
    """One CLI invocation: the algebra, what to compute and how to print it."""

    command: str = field(kw_only=True)
    algebra: Optional[str] = field(default=None, kw_only=True)
    matrix: Optional[list[list[int]]] = field(default=None, kw_only=True)
    kind: Optional[CartanKind] = field(default=None, kw_only=True)
    checks: Optional[tuple[str, ...]] = field(default=None, converter=_check_names, kw_only=True)
    weight: Optional[list[int]] = field(default=None, kw_only=True)
    delta: int = field(default=0, kw_only=True)
    floor: Optional[list[int]] = field(default=None, kw_only=True)
    floor_delta: int = field(default=0, kw_only=True)
    depth: Optional[int] = field(default=None, kw_only=True)
    order: Optional[int] = field(default=None, kw_only=True)
    t_degree: Optional[int] = field(default=None, kw_only=True)
    t_value: Optional[int] = field(default=None, kw_only=True)
    level: int = field(default=1, kw_only=True)
    extra_radius: int = field(default=0, kw_only=True)
    function: bool = field(default=False, kw_only=True)
    output_format: OutputFormat = field(default=OutputFormat.JSON, kw_only=True)
    parallel: bool = field(default=False, kw_only=True)
    verbose: bool = field(default=False, kw_only=True)
    memory_guard_mb: int = field(
        default=Factory(lambda: config("KMK_MEMORY_GUARD_MB", default=256, cast=int)),
        kw_only=True
    )

    @command.validator
    def validate_command(self, _, command: str) -> None:
        if command not in COMMANDS:
            raise ConfigError(f"unknown command {command!r}")

    def __attrs_post_init__(self) -> None:
        if (self.algebra is None) == (self.matrix is None):
            raise ConfigError("give exactly one of an algebra name and a Cartan matrix")
        if (self.command == "verify") != bool(self.checks):
            raise ConfigError("check names go with the verify command and only with it")

    def datum(self) -> CartanDatum:
        if self.algebra is not None:
            datum = from_name(self.algebra)
            if self.kind is not None and self.kind != datum.kind:
                raise ConfigError(f"{self.algebra} is not of {self.kind.value} type")
            return datum

        return validate(self.matrix, kind_hint=self.kind)

    def make_weight(self, datum: CartanDatum, labels: Optional[list[int]], delta: int = 0) -> Optional[Weight]:
        if labels is None:
            return None
        if len(labels) != datum.rank:
            raise ConfigError(f"a weight of {datum.label} needs {datum.rank} labels, got {len(labels)}")
        if delta and not datum.is_affine:
            raise ConfigError("a delta coefficient needs an affine algebra")

        return Weight(labels, delta)

    def effective_depth(self, datum: CartanDatum) -> int:
        if self.command == "string" or any(c in ("level0", "level1", "string-routes") for c in self.checks or ()):
            return (self.order or 0) * datum.delta_height + (self.depth or 0)

        return self.depth or 0

    def guard(self, datum: CartanDatum) -> None:
        demand = self.effective_depth(datum) * datum.rank

        if demand > self.memory_guard_mb:
            raise ResourceGuardError(
                f"depth x rank = {demand} exceeds the memory guard of {self.memory_guard_mb} (KMK_MEMORY_GUARD_MB)"
            )
