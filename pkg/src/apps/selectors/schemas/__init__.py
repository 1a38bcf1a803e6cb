from apps.selectors.schemas.selector import (
    DEFAULT_BIN_POLICIES,
    ChiSquareResult,
    FittedSelection,
    PcaModel,
    SelectorKind,
)

__all__ = [
    "ChiSquareResult",
    "DEFAULT_BIN_POLICIES",
    "FittedSelection",
    "PcaModel",
    "SelectorKind",
]
