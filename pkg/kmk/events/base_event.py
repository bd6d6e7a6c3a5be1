from abc import ABC
from attr import define


@define
class BaseEvent(ABC):
    ...
