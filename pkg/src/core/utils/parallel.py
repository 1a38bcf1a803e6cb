from typing import Any, Callable, Iterable, TypeVar

from joblib import Parallel, delayed

T = TypeVar("T")


def ordered_map(func: Callable[..., T], items: Iterable[Any], n_jobs: int = 1) -> list[T]:
    """
    Apply `func` to every item, possibly in worker threads.

    Results come back in input order whatever the completion order, so callers
    assemble deterministic output.

    Args:
        func (Callable): Function of one item.
        items (Iterable): Inputs.
        n_jobs (int): Worker count; 1 runs inline.

    Returns:
        list: `func(item)` for every item, in order.
    """
    items = list(items)
    if n_jobs == 1 or len(items) < 2:
        return [func(item) for item in items]
    return Parallel(n_jobs=min(n_jobs, len(items)), prefer="threads")(
        delayed(func)(item) for item in items
    )
