from __future__ import annotations
from typing import TYPE_CHECKING
from attrs import define, field
from kmk.events.base_event import BaseEvent

if TYPE_CHECKING:
    from kmk.tasks import BaseTask


@define
class StartTaskEvent(BaseEvent):
    task: BaseTask = field(kw_only=True)
