from .base_event import BaseEvent
from .start_task_event import StartTaskEvent
from .finish_task_event import FinishTaskEvent
from .finish_check_event import FinishCheckEvent


__all__ = [
    "BaseEvent",
    "StartTaskEvent",
    "FinishTaskEvent",
    "FinishCheckEvent"
]
