from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List

import tqdm
from loguru import logger

from jsjcube.config.config import Configs


def run_in_thread_pool(
    func: Callable,
    params: List[Dict],
    threads: int | None = None,
    desc: str = "",
) -> List[Any]:
    """
    Run ``func(**kwargs)`` for every kwargs in ``params`` and return the results
    in submission order, so the output never depends on the worker count.
    Exceptions raised by a task propagate to the caller.
    """
    threads = threads or Configs.basic_config.threads
    show = Configs.basic_config.show_progress and len(params) > 1
    bar = tqdm.tqdm(total=len(params), desc=desc, disable=not show)

    if threads <= 1 or len(params) <= 1:
        results = []
        for kwargs in params:
            results.append(func(**kwargs))
            bar.update(1)
        bar.close()
        return results

    logger.debug(f"{desc or func.__name__}: {len(params)} tasks on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        tasks = [pool.submit(func, **kwargs) for kwargs in params]
        results = []
        for task in tasks:
            results.append(task.result())
            bar.update(1)
    bar.close()
    return results
