import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterable, List, TypeVar

from hopfmon.lib.utils import active_limits, set_limits

T = TypeVar("T")
R = TypeVar("R")


def _init_worker(limits: Dict[str, int]) -> None:
    set_limits(limits)


def parallel_map(fn: Callable[[T], R], tasks: Iterable[T], jobs: int = 1) -> List[R]:
    """
    Maps fn over tasks, in worker processes when jobs > 1. Results keep the order of the tasks.

    fn and the tasks have to be picklable: use module level functions, functools.partial for extra arguments.

    :param fn: function applied to each task
    :param tasks: work items
    :param jobs: number of worker processes
    :return: list of results
    """
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]

    logging.info(f"dispatching {len(tasks)} tasks to {jobs} workers")
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker, initargs=(active_limits(),)) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def merge_counts(counts: Iterable[Dict]) -> Dict:
    """Adds dicts of integer counts, keeping keys whose total is zero."""
    out: Dict = {}
    for c in counts:
        for k, v in c.items():
            out[k] = out.get(k, 0) + v
    return out
