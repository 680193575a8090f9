import os
import logging

from src.errors import ConfigurationError

# Companion search budget, in tested sign assignments
DEFAULT_SEARCH_CAP = 2 ** 24

CAP_ENV_VAR = 'QUASICARTAN_CAP'
LOG_LEVEL_ENV_VAR = 'QUASICARTAN_LOG_LEVEL'


def parse_cap(value, source='--cap'):
    """Validate a search cap coming from a flag or the environment"""
    try:
        cap = int(value)
    except (TypeError, ValueError):
        raise ConfigurationError(f'{source} must be a positive integer, got {value!r}')
    if cap <= 0:
        raise ConfigurationError(f'{source} must be a positive integer, got {value!r}')
    return cap


def default_search_cap():
    """Search cap from QUASICARTAN_CAP, falling back to 2**24"""
    value = os.environ.get(CAP_ENV_VAR)
    if value is None or value.strip() == '':
        return DEFAULT_SEARCH_CAP
    return parse_cap(value.strip(), source=CAP_ENV_VAR)


def log_level(verbose=False):
    if verbose:
        return logging.DEBUG
    name = os.environ.get(LOG_LEVEL_ENV_VAR, 'WARNING').upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ConfigurationError(f'{LOG_LEVEL_ENV_VAR} is not a log level: {name!r}')
    return level
