"""Utility functions for dgw"""

import logging
import os
from pathlib import Path

from ..covergroup import DEFAULT_MAX_ELEMENTS

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPPED = 3


def get_output_dir():
    """Get the directory where build and search write files"""
    out = os.environ.get('DGW_OUTPUT_DIR')
    if out:
        return Path(out)
    return Path.cwd()


def get_max_elements():
    """Get the element cap for group enumeration"""
    value = os.environ.get('DGW_MAX_ELEMS')
    return int(value) if value else DEFAULT_MAX_ELEMENTS


def get_threads():
    """Get the worker count for searches"""
    value = os.environ.get('DGW_THREADS')
    return int(value) if value else 1


def get_log_level(verbosity=0):
    """Logging level from -v flags, falling back to DGW_LOG_LEVEL"""
    if verbosity >= 2:
        return logging.DEBUG
    if verbosity == 1:
        return logging.INFO
    name = os.environ.get('DGW_LOG_LEVEL', 'WARNING').upper()
    return getattr(logging, name, logging.WARNING)


def configure_logging(verbosity=0):
    logging.basicConfig(level=get_log_level(verbosity), format='%(levelname)s %(name)s: %(message)s')


def resolve_output_dir(out=None):
    path = Path(out) if out else get_output_dir()
    path.mkdir(parents=True, exist_ok=True)
    return path


def emit(pairs, fmt='text'):
    """Print (key, value) pairs as 'key value' lines, or tab separated records"""
    for key, value in pairs:
        if fmt == 'records':
            print(f"{key}\t{value}")
        else:
            print(f"{key} {value}")
