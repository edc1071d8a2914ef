"""
Library and CLI Configuration
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Numerical defaults; only logging reads from the .env file"""

    # Series engine
    SERIES_ORDER = 32
    RADIUS_TAIL_TOL = 1e-14
    RADIUS_CAP = 0.5

    # Gauss series for F_a
    HYPERGEOM_TOL = 1e-16
    HYPERGEOM_MAX_TERMS = 10000

    # Quadrature oracle for phi
    QUADRATURE_NODES = 64
    ORACLE_TOL = 1e-12
    ORACLE_MAX_ITER = 50

    # Weierstrass Laurent expansion (number of even-order terms)
    WP_TERMS = 40
    WP_RADIUS_CAP = 1.0

    # Verification tolerances
    SERIES_TOL = 1e-10
    POINTWISE_TOL = 1e-9
    EXACT_TOL = 0

    # Default verification grid
    DEFAULT_A_GRID = ['1/4', '1/6', '1/8', '1/10', '1/3', '1/5', '1/7']
    DEFAULT_KAPPA_GRID = [0.3, 0.6, 0.8, 0.95]
    POLAR_SEARCH_LIMIT = 10 ** 6

    # Suite execution
    N_JOBS = 1

    # Logging; the only env-driven setting
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    API_VERSION = '1.0.0'
