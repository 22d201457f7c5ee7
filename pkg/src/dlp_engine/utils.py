# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
import logging
import os
from pathlib import Path
from typing import Optional

from pymodaq_utils.config import BaseConfig
from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.syntax import DLPError

logger = set_logger(get_module_name(__file__))

LIMIT_ENV_VARIABLE = 'DLP_ENGINE_LIMIT'
LOGGER_BASE_NAMES = ('pymodaq', 'dlp_engine')


class Config(BaseConfig):
    """Main class to deal with configuration values for this package"""
    config_template_path = Path(__file__).parent.joinpath('resources/config_template.toml')
    config_name = 'config_dlp_engine'


class InvalidLimitError(DLPError, ValueError):
    pass


config = Config()


def _checked_limit(limit, origin: str) -> int:
    try:
        limit = int(limit)
    except (TypeError, ValueError):
        raise InvalidLimitError(f'The enumeration limit from {origin} is not an integer: {limit!r}') from None
    if limit < 1:
        raise InvalidLimitError(f'The enumeration limit from {origin} must be at least 1, got {limit}')
    return limit


def get_enumeration_limit(limit: Optional[int] = None) -> int:
    """Maximum alphabet size to enumerate

    The explicit argument wins over the DLP_ENGINE_LIMIT environment variable, which wins over the
    configuration file
    """
    if limit is not None:
        return _checked_limit(limit, 'the argument')
    if os.environ.get(LIMIT_ENV_VARIABLE, '').strip():
        return _checked_limit(os.environ[LIMIT_ENV_VARIABLE], LIMIT_ENV_VARIABLE)
    return _checked_limit(config('engine', 'enumeration_limit'), 'the configuration')


def get_oracle_limit(limit: Optional[int] = None) -> int:
    if limit is not None:
        return _checked_limit(limit, 'the argument')
    return _checked_limit(config('engine', 'oracle_rule_limit'), 'the configuration')


def set_debug_level():
    """Raise every logger of the package to DEBUG"""
    for name, item in logging.root.manager.loggerDict.items():
        if isinstance(item, logging.Logger) and name.startswith(LOGGER_BASE_NAMES):
            item.setLevel(logging.DEBUG)
