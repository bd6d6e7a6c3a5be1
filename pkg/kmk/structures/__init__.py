from .structure import Structure
from .pipeline import Pipeline

__all__ = [
    "Structure",
    "Pipeline"
]
