"""Константные значения для работы приложений."""

DEFAULT_CAP_PLAIN = 7
DEFAULT_CAP_SYMMETRIC = 4
DEFAULT_RMAX_CAP = 12
DEFAULT_ROOT_EPS = '1/1048576'

DEFAULT_RMAX = 4
STANDARDIZED_KMAX = 4
MIN_HALF_PERIMETER = 2

DEFAULT_SCALED_KMAX = 4
DEFAULT_GRID_POINTS = 5

# Верхние границы n в запросах к API.
API_NMAX_LIMIT = 200
API_ROOTS_N_LIMIT = 60

# Параметры семейств по умолчанию.
DEFAULT_HJ_A = 1
DEFAULT_HJ_B = 0
DEFAULT_W_C = 1
DEFAULT_W_M = 1
DEFAULT_BE1_M = 1
