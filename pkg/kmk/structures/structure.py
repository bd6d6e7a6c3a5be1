from __future__ import annotations
import logging
import uuid
from abc import ABC, abstractmethod
from concurrent import futures
from logging import Logger
from typing import Optional, Union, TYPE_CHECKING, Callable, Type
from attr import define, field, Factory
from rich.console import Console
from rich.logging import RichHandler
from kmk.engines import AffineStringEngine, HallLittlewoodEngine, KostkaEngine
from kmk.events import BaseEvent
from kmk.lie import CartanDatum

if TYPE_CHECKING:
    from kmk.tasks import BaseTask


@define
class Structure(ABC):
    LOGGER_NAME = "kmk"

    id: str = field(default=Factory(lambda: uuid.uuid4().hex), kw_only=True)
    datum: CartanDatum = field(kw_only=True)
    tasks: list[BaseTask] = field(factory=list, kw_only=True)
    custom_logger: Optional[Logger] = field(default=None, kw_only=True)
    logger_level: int = field(default=logging.WARNING, kw_only=True)
    event_listeners: Union[list[Callable], dict[Type[BaseEvent], list[Callable]]] = field(factory=list, kw_only=True)
    futures_executor: Optional[futures.Executor] = field(default=None, kw_only=True)
    _logger: Optional[Logger] = None
    _kostka_engine: Optional[KostkaEngine] = field(default=None, init=False)
    _hall_littlewood_engine: Optional[HallLittlewoodEngine] = field(default=None, init=False)
    _affine_string_engine: Optional[AffineStringEngine] = field(default=None, init=False)

    def __attrs_post_init__(self):
        for task in self.tasks:
            task.structure = self

    @property
    def logger(self) -> Logger:
        if self.custom_logger:
            return self.custom_logger
        else:
            if self._logger is None:
                self._logger = logging.getLogger(self.LOGGER_NAME)

                self._logger.propagate = False
                self._logger.level = self.logger_level

                # stdout carries the results
                self._logger.handlers = [
                    RichHandler(
                        console=Console(stderr=True),
                        show_time=True,
                        show_path=False
                    )
                ]
            return self._logger

    @property
    def kostka_engine(self) -> KostkaEngine:
        if self._kostka_engine is None:
            self._kostka_engine = KostkaEngine(datum=self.datum, futures_executor=self.futures_executor)
        return self._kostka_engine

    @property
    def hall_littlewood_engine(self) -> HallLittlewoodEngine:
        if self._hall_littlewood_engine is None:
            self._hall_littlewood_engine = HallLittlewoodEngine(datum=self.datum, kostka_engine=self.kostka_engine)
        return self._hall_littlewood_engine

    @property
    def affine_string_engine(self) -> AffineStringEngine:
        if self._affine_string_engine is None:
            self._affine_string_engine = AffineStringEngine(
                datum=self.datum,
                hall_littlewood_engine=self.hall_littlewood_engine
            )
        return self._affine_string_engine

    def is_finished(self) -> bool:
        return all(s.is_finished() for s in self.tasks)

    def find_task(self, task_id: str) -> Optional[BaseTask]:
        return next((task for task in self.tasks if task.id == task_id), None)

    def add_tasks(self, *tasks: BaseTask) -> list[BaseTask]:
        return [self.add_task(s) for s in tasks]

    def publish_event(self, event: BaseEvent) -> None:
        if isinstance(self.event_listeners, dict):
            listeners = self.event_listeners.get(type(event), [])
        else:
            listeners = self.event_listeners

        for listener in listeners:
            listener(event)

    @abstractmethod
    def add_task(self, task: BaseTask) -> BaseTask:
        ...

    @abstractmethod
    def run(self) -> Union[BaseTask, list[BaseTask]]:
        ...
