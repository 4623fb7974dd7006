"""
Run settings.

Settings are read, in increasing precedence, from :data:`DEFAULTS`, from
the python file named by the ``STEINER_ECC_SETTINGS`` environment variable
and from individual ``STEINER_ECC_<KEY>`` environment variables, whose
values are decoded as JSON when possible (``STEINER_ECC_BUDGET=1000``
sets ``BUDGET``).
"""
import logging
import os

from flask import Config

log = logging.getLogger(__name__)

__all__ = ("DEFAULTS", "PREFIX", "SETTINGS_ENVVAR", "load_config")

PREFIX = "STEINER_ECC"
SETTINGS_ENVVAR = "STEINER_ECC_SETTINGS"

DEFAULTS = {
    # refuse oracle searches estimated above this many elementary steps
    "BUDGET": 10**8,
    "FORMAT": "text",
    "SEED": 42,
    "MAX_N": 8,
    "RANDOM_MIN_N": 9,
    "RANDOM_MAX_N": 40,
    "RANDOM_PER_N": 500,
    "BENCH_SIZES": [1000, 10000, 100000, 1000000],
    "BENCH_REPEAT": 5,
    "BENCH_FAMILY": "spider",
    "CHAIN_CAP_FACTOR": 1,
    "VALIDATE_OUTPUT": True,
}


def load_config(root_path=None):
    """
    Build the settings mapping from the defaults and the environment.

    :param str root_path: the directory relative settings files are resolved from
    :rtype: flask.Config
    """
    config = Config(root_path or os.getcwd())
    config.from_mapping(DEFAULTS)
    if config.from_envvar(SETTINGS_ENVVAR, silent=True):
        log.info("Loaded settings from %s", os.environ[SETTINGS_ENVVAR])
    config.from_prefixed_env(PREFIX)
    # the settings file variable is not a setting itself
    config.pop("SETTINGS", None)
    return config
