"""Order-preserving map over a process pool (or inline when workers <= 1)."""

from __future__ import annotations

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor


def default_workers() -> int:
    raw = os.environ.get("HOFFCOLOR_WORKERS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pmap(fn: Callable, items: Iterable, workers: int | None = None, chunksize: int = 64) -> list:
    items = list(items)
    w = default_workers() if workers is None else workers
    if w <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=w) as ex:
        return list(ex.map(fn, items, chunksize=chunksize))
