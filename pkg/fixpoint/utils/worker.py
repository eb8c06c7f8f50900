# Copyright (c) fixpoint authors. All rights reserved.
#
# This source code is licensed under the BSD license found in the
# LICENSE file in the root directory of this source tree.

"""Worker lanes for running independent verification samples side by side."""
from contextlib import contextmanager
from queue import Queue
import sys
from threading import Thread
from types import TracebackType
from typing import TYPE_CHECKING, Any, Callable, Generator, List, Optional, Sequence, Tuple, Type, TypeVar, Union, cast

__all__ = ["Task", "spawn_workers", "run_tasks"]

T = TypeVar("T")

ExcInfo = Tuple[Type[BaseException], BaseException, TracebackType]

# Queue is generic only in stubs.
# https://mypy.readthedocs.io/en/latest/common_issues.html#using-classes-that-are-generic-in-stubs-but-not-at-runtime
if TYPE_CHECKING:
    InQueue = Queue[Optional["Task"]]
    OutQueue = Queue[Tuple[bool, Union[Tuple["Task", Any], ExcInfo, None]]]
else:
    InQueue = Queue
    OutQueue = Queue


class Task:
    """A unit of work for a lane: :meth:`compute` runs on the worker thread,
    its result travels back on the lane's out-queue together with the task.
    """

    def __init__(self, index: int, *, compute: Callable[[], Any]) -> None:
        self.index = index
        self._compute = compute

    def compute(self) -> Any:
        return self._compute()


def worker(in_queue: InQueue, out_queue: OutQueue) -> None:
    """The main loop of a worker thread."""
    while True:
        task = in_queue.get()

        if task is None:
            break

        try:
            result = task.compute()
        except Exception:
            exc_info = cast(ExcInfo, sys.exc_info())
            out_queue.put((False, exc_info))
            continue

        out_queue.put((True, (task, result)))

    done = (False, None)
    out_queue.put(done)


def create_workers(count: int) -> Tuple[List[InQueue], List[OutQueue]]:
    """Spawns ``count`` worker threads, one in-queue / out-queue pair each."""
    if count < 1:
        raise ValueError(f"number of workers must be a positive integer ({count} < 1)")

    in_queues: List[InQueue] = []
    out_queues: List[OutQueue] = []

    for _ in range(count):
        in_queue: InQueue = Queue()
        out_queue: OutQueue = Queue()

        t = Thread(target=worker, args=(in_queue, out_queue), daemon=True)
        t.start()

        in_queues.append(in_queue)
        out_queues.append(out_queue)

    return (in_queues, out_queues)


def join_workers(in_queues: List[InQueue], out_queues: List[OutQueue]) -> None:
    # Close workers.
    for in_queue in set(in_queues):
        in_queue.put(None)

    # Join running workers.
    running = set(out_queues)
    while running:
        out_queue = running.pop()
        ok, payload = out_queue.get()

        done = (False, None)
        if (ok, payload) == done:
            continue

        running.add(out_queue)


@contextmanager
def spawn_workers(count: int) -> Generator[Tuple[List[InQueue], List[OutQueue]], None, None]:
    (in_queues, out_queues) = create_workers(count)
    try:
        yield (in_queues, out_queues)
    finally:
        join_workers(in_queues, out_queues)


def run_tasks(functions: Sequence[Callable[[], T]], workers: int = 1) -> List[T]:
    """Calls every function and returns the results in input order.

    With ``workers == 1`` everything runs inline. Otherwise task ``i`` goes to
    lane ``i % workers``; the first exception raised by any task is re-raised
    once all lanes have reported back.
    """
    if workers <= 1 or len(functions) <= 1:
        return [f() for f in functions]

    results: List[Any] = [None] * len(functions)
    exc_info: Optional[ExcInfo] = None

    with spawn_workers(min(workers, len(functions))) as (in_queues, out_queues):
        lanes = len(in_queues)
        for i, f in enumerate(functions):
            in_queues[i % lanes].put(Task(i, compute=f))

        for i in range(len(functions)):
            ok, payload = out_queues[i % lanes].get()

            # Hold the first exception.
            if exc_info is not None:
                continue
            elif not ok:
                exc_info = cast(ExcInfo, payload)
                continue

            task, result = cast(Tuple[Task, Any], payload)
            results[task.index] = result

    # Fail at the first exception.
    if exc_info is not None:
        raise exc_info[1].with_traceback(exc_info[2])

    return cast(List[T], results)
