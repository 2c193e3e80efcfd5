import logging

# Polyhedral routines are exact but enumerate faces exhaustively.
MAX_AMBIENT_DIM = 6

LOG_FORMAT = '%(name)s:%(levelname)s:%(message)s'
DEFAULT_VERBOSITY = 0

# Single letter names, used when n <= len(VARIABLE_NAMES); x1..xn always work.
VARIABLE_NAMES = ("x", "y", "z", "w")

# Oracles brute force facets and only go this far.
ORACLE_MAX_DIM = 3

# spectrum_by_definition truncates at n + SPECTRUM_BOUND_PAD by default.
SPECTRUM_BOUND_PAD = 2

# Lattice point enumeration runs in int64: dilated vertex coordinates and
# facet normal entries must stay below this in absolute value.
MAX_GRID_ENTRY = 2 ** 28


def configure_logging(verbosity=DEFAULT_VERBOSITY):
    """Installs one stream handler on the package logger. 0 -> WARNING, 1 -> INFO, 2+ -> DEBUG."""

    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logger = logging.getLogger("newton_monodromy")
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(level)
    return logger
