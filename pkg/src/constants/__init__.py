from constants.config import (
    COLLINEAR_TOLERANCE,
    DEFAULT_BIN_COUNT,
    DEFAULT_DT_MAX_DEPTH,
    DEFAULT_K_NEIGHBORS,
    DEFAULT_LR_C,
    DEFAULT_LR_MAX_ITERS,
    DEFAULT_N_PERMUTATIONS,
    DEFAULT_PN_ALPHA,
    GNB_VARIANCE_FLOOR,
    LR_TOLERANCE,
    MIN_PLANE_POINTS,
    TIE_POLICY,
    TMA_TIE_POLICY,
)
from constants.messages import (
    ALL_COLUMNS_DROPPED,
    COLLINEAR_TRIPLE,
    DIMENSION_MISMATCH,
    DOWNLOAD_FAILED,
    EMPTY_FILE,
    EMPTY_REPORT,
    EMPTY_SELECTION,
    ERROR,
    INSUFFICIENT_DATA,
    INVALID_COMPONENTS,
    INVALID_CONFIGURATION,
    INVALID_DATA,
    K_AND_THRESHOLD,
    MISSING_CLASS,
    MISSING_LABEL,
    NO_DATA_ROWS,
    NON_FINITE_VALUES,
    NON_NUMERIC_CELL,
    NOT_A_RANKING,
    NOT_PRE_NORMALIZED,
    PARSE_FAILED,
    RAGGED_ROW,
    SOMETHING_WENT_WRONG,
    THRESHOLD_NEGATIVE,
    TOO_FEW_FOLDS,
    TOO_MANY_FOLDS,
    TOP_K_OUT_OF_RANGE,
    UNKNOWN_LABEL_COLUMN,
    UNKNOWN_NAME,
)

__all__ = [
    "COLLINEAR_TOLERANCE",
    "MIN_PLANE_POINTS",
    "DEFAULT_PN_ALPHA",
    "DEFAULT_BIN_COUNT",
    "GNB_VARIANCE_FLOOR",
    "DEFAULT_K_NEIGHBORS",
    "DEFAULT_DT_MAX_DEPTH",
    "DEFAULT_LR_C",
    "DEFAULT_LR_MAX_ITERS",
    "LR_TOLERANCE",
    "DEFAULT_N_PERMUTATIONS",
    "TIE_POLICY",
    "TMA_TIE_POLICY",
    "SOMETHING_WENT_WRONG",
    "ERROR",
    "INVALID_CONFIGURATION",
    "UNKNOWN_LABEL_COLUMN",
    "TOP_K_OUT_OF_RANGE",
    "THRESHOLD_NEGATIVE",
    "K_AND_THRESHOLD",
    "UNKNOWN_NAME",
    "DIMENSION_MISMATCH",
    "TOO_MANY_FOLDS",
    "TOO_FEW_FOLDS",
    "INVALID_COMPONENTS",
    "NOT_A_RANKING",
    "PARSE_FAILED",
    "EMPTY_FILE",
    "NO_DATA_ROWS",
    "RAGGED_ROW",
    "INVALID_DATA",
    "NON_NUMERIC_CELL",
    "NON_FINITE_VALUES",
    "MISSING_LABEL",
    "ALL_COLUMNS_DROPPED",
    "INSUFFICIENT_DATA",
    "NOT_PRE_NORMALIZED",
    "MISSING_CLASS",
    "EMPTY_SELECTION",
    "COLLINEAR_TRIPLE",
    "DOWNLOAD_FAILED",
    "EMPTY_REPORT",
]
