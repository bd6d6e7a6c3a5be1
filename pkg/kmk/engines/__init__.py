from .base_engine import BaseEngine
from .base_table import BaseTable
from .kostka_table import KostkaTable
from .hl_expansion import HLExpansion
from .string_function import StringFunction
from .kostant_engine import KostantEngine
from .character_engine import CharacterEngine
from .kostka_engine import KostkaEngine
from .hall_littlewood_engine import HallLittlewoodEngine
from .affine_string_engine import AffineStringEngine


__all__ = [
    "BaseEngine",
    "BaseTable",
    "KostkaTable",
    "HLExpansion",
    "StringFunction",
    "KostantEngine",
    "CharacterEngine",
    "KostkaEngine",
    "HallLittlewoodEngine",
    "AffineStringEngine"
]
