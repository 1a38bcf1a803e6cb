from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel  # noqa


class CamelCaseModel(BaseModel):
    """
    A schema base for report objects; JSON output uses camelCase keys.
    """

    model_config = ConfigDict(
        alias_generator=to_camel,
        populate_by_name=True,
        arbitrary_types_allowed=True,
        from_attributes=True,
    )


class FrozenModel(CamelCaseModel):
    """
    Immutable schema base for values that are shared between workers after
    construction (datasets, fitted models).
    """

    model_config = ConfigDict(frozen=True)


def readonly_array(value: Any, dtype: Any = float, ndim: int | None = None) -> np.ndarray:
    """
    Copy `value` into a numpy array that cannot be written to.

    Args:
        value (Any): Array-like input.
        dtype (Any): Target dtype.
        ndim (int | None): Required number of dimensions, if any.

    Returns:
        np.ndarray: A read-only copy.
    """
    array = np.array(value, dtype=dtype, copy=True)
    if ndim is not None and array.ndim != ndim:
        raise ValueError(f"expected a {ndim}-D array, got shape {array.shape}")
    array.flags.writeable = False
    return array
