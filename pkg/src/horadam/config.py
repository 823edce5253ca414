"""Default size caps. Every function taking a cap accepts an override."""

VERTEX_CAP = 10**6
BRUTE_EDGE_CAP = 2_000
BRUTE_SUBCUBE_CAP = 5_000
BRUTE_SUBCUBE_MAX_K = 6
MEDIAN_CAP = 300
FIBONACCI_CUBE_MAX_DIM = 24
SERIES_ORDER = 32
SERIES_ORDER_CAP = 4_096
STRUCTURE_CHECK_CAP = 5_000
DEGREE_CHECK_CAP = 20_000
HAMILTON_CHECK_CAP = 20_000
