from concurrent import futures
from typing import Hashable, TypeVar

K = TypeVar("K", bound=Hashable)
T = TypeVar("T")


def execute_futures_dict(fs_dict: dict[K, futures.Future[T]]) -> dict[K, T]:
    futures.wait(fs_dict.values(), timeout=None, return_when=futures.ALL_COMPLETED)

    return {key: future.result() for key, future in fs_dict.items()}
