"""Ordered fan-out of Monte Carlo work units over worker processes."""

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

TaskT = TypeVar("TaskT")
ResultT = TypeVar("ResultT")


def map_ordered(
    func: Callable[[TaskT], ResultT],
    tasks: Sequence[TaskT],
    workers: int = 1,
) -> list[ResultT]:
    """Apply func to every task, returning results in task order.

    With more than one worker, func and the tasks must be picklable
    (module-level functions, built-in score functions).
    """
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]

    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as executor:
        return list(executor.map(func, tasks))


def chunk_ranges(total: int, chunk_size: int) -> list[tuple[int, int]]:
    """(start, count) pairs covering range(total) in order."""
    if chunk_size < 1:
        raise ValueError("chunk_size must be at least 1")
    return [(start, min(chunk_size, total - start)) for start in range(0, total, chunk_size)]
