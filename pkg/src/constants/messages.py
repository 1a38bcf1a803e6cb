SOMETHING_WENT_WRONG = "Something went wrong!"

ERROR = "Error"

# Configuration
INVALID_CONFIGURATION = "Invalid configuration."
UNKNOWN_LABEL_COLUMN = "Label column {column!r} not found. Available: {available}"
TOP_K_OUT_OF_RANGE = "k must be between 1 and {n_features}, got {k}."
THRESHOLD_NEGATIVE = "Threshold must be non-negative, got {threshold}."
K_AND_THRESHOLD = "Use either --top-k or --threshold, not both."
UNKNOWN_NAME = "Unknown {kind} {name!r}. Valid names: {valid}"
DIMENSION_MISMATCH = "Expected {expected} feature columns, got {actual}."
TOO_MANY_FOLDS = "n_folds={n_folds} exceeds the number of instances ({m})."
TOO_FEW_FOLDS = "n_folds must be at least 2, got {n_folds}."
INVALID_COMPONENTS = "n_components must be between 1 and {k}, got {n_components}."
NOT_A_RANKING = "{selector} projects features and does not rank them."

# Parsing
PARSE_FAILED = "Could not parse the input file."
EMPTY_FILE = "Input file {path} is empty."
NO_DATA_ROWS = "Input file {path} has no data rows."
RAGGED_ROW = "Row {row} has {actual} cells, expected {expected}."

# Data
INVALID_DATA = "Invalid data."
NON_NUMERIC_CELL = "Column {column!r}, row {row}: cannot parse {cell!r} as a finite number."
NON_FINITE_VALUES = "Input contains NaN or infinite values."
MISSING_LABEL = "Row {row} has a missing class label."
ALL_COLUMNS_DROPPED = "Every feature column contains missing values; nothing left."
INSUFFICIENT_DATA = "At least {minimum} instances are required, got {actual}."
NOT_PRE_NORMALIZED = "Planes need Min-Max normalised features in [0, 1]."
MISSING_CLASS = "Class {class_id} has no training instances."
EMPTY_SELECTION = "No feature has a weight above the threshold {threshold}."
COLLINEAR_TRIPLE = "Collinear points have no circumcircle (infinite radius)."
DOWNLOAD_FAILED = "Download of {url} failed with HTTP {status}."
EMPTY_REPORT = "The report has no successful cell to summarise."
