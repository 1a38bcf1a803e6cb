import numpy as np

import constants
from apps.benchmark.exceptions import FoldCountOutOfRange
from apps.benchmark.schemas import Fold
from apps.dataset.schemas import Dataset
from core.utils import logger


def make_folds(ds: Dataset, n_folds: int, seed: int = 0) -> list[Fold]:
    """
    Stratified k-fold split of the rows of a dataset.

    The rows of each class are shuffled with `seed` and dealt round-robin over the
    folds. The dealing position carries over from one class to the next, so fold
    sizes differ by at most one and every class is spread within one instance of
    its global share.

    Parameters:
        ds (Dataset): The dataset.
        n_folds (int): Number of folds, 2..m.
        seed (int): Seed of the shuffle.

    Returns:
        list[Fold]: Folds whose test sets partition range(m); indices are sorted.

    Raises:
        FoldCountOutOfRange: If n_folds < 2 or n_folds > m.
    """
    m = ds.n_instances
    if n_folds < 2:
        raise FoldCountOutOfRange(constants.TOO_FEW_FOLDS.format(n_folds=n_folds))
    if n_folds > m:
        raise FoldCountOutOfRange(constants.TOO_MANY_FOLDS.format(n_folds=n_folds, m=m))

    rng = np.random.default_rng(seed)
    assignment = np.empty(m, dtype=np.int64)
    offset = 0
    for cls in range(ds.n_classes):
        members = rng.permutation(np.flatnonzero(ds.labels == cls))
        if 0 < len(members) < n_folds:
            logger.warning(
                f"Class {ds.class_names[cls]!r} has {len(members)} instance(s) "
                f"for {n_folds} folds; some folds will not test it"
            )
        assignment[members] = (offset + np.arange(len(members))) % n_folds
        offset = (offset + len(members)) % n_folds

    rows = np.arange(m)
    return [
        Fold(index=fold, train=rows[assignment != fold], test=rows[assignment == fold])
        for fold in range(n_folds)
    ]
