"""
FoldKappa app core config module

Settings are read from the environment (``FOLDKAPPA_*`` variables) and may be overridden
by a YAML settings file whose path is given in ``FOLDKAPPA_SETTINGS``, e.g.::

    max_vertices: 1048576
    workers: 4
    wall_clock_seconds: 120
"""

import os
from typing import Optional

from foldkappa.app.conversions.files import read_yaml_file


def getenv_boolean(var_name: str,
                   default_value: bool = False,
                   ) -> bool:
    result = default_value
    env_value = os.getenv(var_name)
    if env_value is not None:
        result = env_value.upper() in ("TRUE", "1")
    return result


def getenv_int(var_name: str,
               default_value: Optional[int] = None,
               ) -> Optional[int]:
    env_value = os.getenv(var_name)
    if env_value is None or not env_value.strip():
        return default_value
    try:
        return int(env_value)
    except ValueError:
        raise ValueError(f'The environment variable {var_name} must be an integer, got "{env_value}"')


def getenv_float(var_name: str,
                 default_value: Optional[float] = None,
                 ) -> Optional[float]:
    env_value = os.getenv(var_name)
    if env_value is None or not env_value.strip():
        return default_value
    try:
        return float(env_value)
    except ValueError:
        raise ValueError(f'The environment variable {var_name} must be a number, got "{env_value}"')


PROJECT_NAME = os.getenv("FOLDKAPPA_PROJECT_NAME", "FoldKappa")

MAX_VERTICES = getenv_int("FOLDKAPPA_MAX_VERTICES", 2 ** 24)  # build() refuses larger topologies
ADJACENCY_CACHE_MAX_N = getenv_int("FOLDKAPPA_ADJACENCY_CACHE_MAX_N", 12)  # above this adjacency is computed on demand

WORKERS = getenv_int("FOLDKAPPA_WORKERS", None) or os.cpu_count() or 1

MAX_EXPANSIONS = getenv_int("FOLDKAPPA_MAX_EXPANSIONS", 50_000_000)
WALL_CLOCK_SECONDS = getenv_float("FOLDKAPPA_WALL_CLOCK_SECONDS", 600.0)

LOG_LEVEL = os.getenv("FOLDKAPPA_LOG_LEVEL", "WARNING").upper()

SETTINGS_FILE = os.getenv("FOLDKAPPA_SETTINGS")

SETTINGS_KEYS = {'max_vertices': int,
                 'adjacency_cache_max_n': int,
                 'workers': int,
                 'max_expansions': int,
                 'wall_clock_seconds': float,
                 'log_level': str,
                 }


def load_settings(path: str) -> dict:
    """
    Read and validate a YAML settings file.

    Args:
        path (str): The YAML settings file path.

    Raises:
        ValueError: If the file contains an unknown key or a value of the wrong type.

    Returns:
        dict: The settings, keyed by lowercase setting name.
    """
    content = read_yaml_file(path) or dict()
    if not isinstance(content, dict):
        raise ValueError(f'Expected a mapping in the settings file {path}, got a {type(content)}')
    settings = dict()
    for key, value in content.items():
        if key not in SETTINGS_KEYS:
            raise ValueError(f'Unknown setting "{key}" in {path}. Recognized settings are {sorted(SETTINGS_KEYS)}')
        try:
            settings[key] = SETTINGS_KEYS[key](value)
        except (TypeError, ValueError):
            raise ValueError(f'The setting "{key}" in {path} must be a {SETTINGS_KEYS[key].__name__}, got {value}')
    return settings


if SETTINGS_FILE:
    _settings = load_settings(SETTINGS_FILE)
    MAX_VERTICES = _settings.get('max_vertices', MAX_VERTICES)
    ADJACENCY_CACHE_MAX_N = _settings.get('adjacency_cache_max_n', ADJACENCY_CACHE_MAX_N)
    WORKERS = _settings.get('workers', WORKERS)
    MAX_EXPANSIONS = _settings.get('max_expansions', MAX_EXPANSIONS)
    WALL_CLOCK_SECONDS = _settings.get('wall_clock_seconds', WALL_CLOCK_SECONDS)
    LOG_LEVEL = _settings.get('log_level', LOG_LEVEL).upper()
