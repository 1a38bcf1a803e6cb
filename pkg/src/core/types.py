from enum import IntEnum, StrEnum


class ExitCode(IntEnum):
    """
    Process exit codes of the command line.

    Attributes:
        SUCCESS: The command finished.
        FAILURE: An unexpected error.
        CONFIGURATION: Invalid flags, config file values or parameters.
        PARSE: The input file is not valid delimiter-separated text.
        DATA: The content cannot be used (non-numeric cells, too few rows, ...).
        EMPTY_SELECTION: A threshold selected no feature.
    """

    SUCCESS = 0
    FAILURE = 1
    CONFIGURATION = 2
    PARSE = 3
    DATA = 4
    EMPTY_SELECTION = 5


class NormalizerTag(StrEnum):
    """
    Enumeration of the post-selection normalisations.

    Composite names are read left to right in application order, so L1PN is
    row-wise L1 followed by the power map and PNL1 is the reverse.
    """

    MM = "mm"
    L1 = "l1"
    L2 = "l2"
    PN = "pn"
    L1PN = "l1pn"
    L2PN = "l2pn"
    PNL1 = "pnl1"
    PNL2 = "pnl2"


class SelectorTag(StrEnum):
    """
    Enumeration of the feature selectors in the comparison grid.

    - CFS: curvature-based ranking.
    - PCA: principal component projection (feature extraction).
    - IG / MI / CST: information gain, mutual information and chi-square filters.
    """

    CFS = "cfs"
    PCA = "pca"
    IG = "ig"
    MI = "mi"
    CST = "cst"


class BinPolicy(StrEnum):
    """
    Discretisation of a continuous feature before entropy or chi-square scoring.
    """

    EQUAL_WIDTH = "equal_width"
    EQUAL_FREQUENCY = "equal_frequency"


class ClassifierTag(StrEnum):
    """
    Enumeration of the built-in classifiers. Plug-ins register further names.
    """

    GNB = "gnb"
    KNN = "knn"
    DT = "dt"
    LR = "lr"


class SelectionScope(StrEnum):
    """
    Where a selector (or a normaliser) is fitted during cross-validation.

    - GLOBAL: once on every row before the folds are built.
    - PER_FOLD: on the training rows of each fold only.
    """

    GLOBAL = "global"
    PER_FOLD = "per_fold"


class OutputFormat(StrEnum):
    """
    Rendering of command output.
    """

    CSV = "csv"
    JSON = "json"
    MATRIX = "matrix"


class BenchmarkDataset(StrEnum):
    """
    The four public clinical datasets of the benchmark.

    - CCRFDS: Cervical Cancer (Risk Factors).
    - BCCDS: Breast Cancer Coimbra.
    - BTDS: Breast Tissue.
    - DRDDS: Diabetic Retinopathy Debrecen.
    """

    CCRFDS = "ccrfds"
    BCCDS = "bccds"
    BTDS = "btds"
    DRDDS = "drdds"
