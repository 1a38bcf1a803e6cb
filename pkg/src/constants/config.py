# Curvature
COLLINEAR_TOLERANCE = 1e-12
MIN_PLANE_POINTS = 3

# Normalisation
DEFAULT_PN_ALPHA = 0.1

# Baseline selectors
DEFAULT_BIN_COUNT = 10

# Classifiers
GNB_VARIANCE_FLOOR = 1e-9
DEFAULT_K_NEIGHBORS = 3
DEFAULT_DT_MAX_DEPTH = 5
DEFAULT_LR_C = 1.0
DEFAULT_LR_MAX_ITERS = 1000
LR_TOLERANCE = 1e-10

# Benchmark
DEFAULT_N_PERMUTATIONS = 20
TIE_POLICY = "weight descending, then feature_id ascending"
TMA_TIE_POLICY = "highest mean accuracy, then normalizer name, then classifier name"
