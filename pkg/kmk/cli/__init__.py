from .main import build_parser, build_tasks, run, main

__all__ = [
    "build_parser",
    "build_tasks",
    "run",
    "main"
]
