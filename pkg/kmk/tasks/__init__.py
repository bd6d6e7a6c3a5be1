from kmk.tasks.base_task import BaseTask
from kmk.tasks.kostka_task import KostkaTask
from kmk.tasks.hall_littlewood_task import HallLittlewoodTask
from kmk.tasks.string_task import StringTask
from kmk.tasks.verify_task import VerifyTask

__all__ = [
    "BaseTask",
    "KostkaTask",
    "HallLittlewoodTask",
    "StringTask",
    "VerifyTask"
]
