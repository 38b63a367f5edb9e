# badprimes/pool.py
"""Process pool with a thread fallback; results arrive in completion order."""

from __future__ import annotations

import logging
import multiprocessing
import sys
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from typing import TypeVar

from tqdm import tqdm

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def _make_executor(max_workers: int) -> Executor:
    try:
        ctx = multiprocessing.get_context("fork")
        return ProcessPoolExecutor(max_workers=max_workers, mp_context=ctx)
    except Exception as e:
        logger.warning(f"Could not start a fork process pool ({e}); falling back to threads")
        return ThreadPoolExecutor(max_workers=max_workers)


def _progress(total: int, desc: str) -> tqdm:
    return tqdm(total=total, desc=desc, file=sys.stderr, disable=not sys.stderr.isatty(), leave=False)


def iter_tasks(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1, desc: str = "") -> Iterator[R]:
    """Yield fn(item) for every item; `fn` must be a module-level function when jobs > 1"""
    with _progress(len(items), desc) as bar:
        if jobs <= 1 or len(items) <= 1:
            for item in items:
                yield fn(item)
                bar.update(1)
            return
        executor = _make_executor(min(jobs, len(items)))
        try:
            futures = [executor.submit(fn, item) for item in items]
            for future in as_completed(futures):
                yield future.result()
                bar.update(1)
        finally:
            # an interrupted caller abandons the queued work
            executor.shutdown(wait=True, cancel_futures=True)


def run_tasks(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1, desc: str = "") -> list[R]:
    return list(iter_tasks(fn, items, jobs=jobs, desc=desc))
