"""
FoldKappa app core workers module
"""

import logging
from multiprocessing import Pool
from typing import Any, Callable, List, Sequence


logger = logging.getLogger(__name__)


def map_tasks(func: Callable[[Any], Any],
              tasks: Sequence[Any],
              workers: int = 1,
              ) -> List[Any]:
    """
    Apply ``func`` to every task, in task order.
    A single worker (or a single task) runs in-process, otherwise a process pool is used.
    ``func`` and the tasks must be picklable for the pool.

    Args:
        func (Callable): A module level function of one argument.
        tasks (Sequence): The task arguments.
        workers (int, optional): The number of processes.

    Returns:
        list: The results, aligned with ``tasks``.
    """
    tasks = list(tasks)
    if workers <= 1 or len(tasks) <= 1:
        return [func(task) for task in tasks]
    processes = min(workers, len(tasks))
    logger.debug(f'Distributing {len(tasks)} tasks over {processes} processes')
    with Pool(processes=processes) as pool:
        return list(pool.imap(func, tasks, chunksize=1))
