import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Any, Callable, List, Sequence, Tuple

from tqdm import tqdm

logger = logging.getLogger(__name__)


def shard_ranges(total: int, shards: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most `shards` contiguous half-open ranges."""
    if total <= 0:
        return []
    shards = max(1, min(shards, total))
    step = -(-total // shards)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def shard_map(
    fn: Callable[..., Any],
    tasks: Sequence[tuple],
    threads: int = 1,
    progress: bool = False,
    desc: str = "scanning",
) -> List[Any]:
    """Run fn(*task) for every task and return results in task order.

    With threads > 1 the tasks go to a process pool; fn must be a module-level
    function. Completion order never leaks into the result.
    """
    results: List[Any] = [None] * len(tasks)
    if threads <= 1 or len(tasks) <= 1:
        for i, task in enumerate(tqdm(tasks, desc=desc, disable=not progress)):
            results[i] = fn(*task)
        return results

    logger.debug("dispatching %d shards to %d workers", len(tasks), threads)
    with ProcessPoolExecutor(max_workers=threads) as executor:
        futures = {executor.submit(fn, *task): i for i, task in enumerate(tasks)}
        for future in tqdm(as_completed(futures), total=len(futures), desc=desc, disable=not progress):
            i = futures[future]
            try:
                results[i] = future.result()
            except Exception as e:
                raise RuntimeError(f"shard {tasks[i]} failed: {e}") from e
    return results
