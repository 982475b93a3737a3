"""Command implementations for dgw

Each subcommand lives in its own module and returns an exit code.
Public functions are re-exported here.
"""

from .build import build_names, build_object
from .cdd_command import describe_cdd, load_params
from .cover_group import print_cover_group
from .diameter import print_diameter
from .factorize import factorize
from .search_command import run_search
from .verify import list_claims, verify

__all__ = [
    'build_names',
    'build_object',
    'describe_cdd',
    'load_params',
    'print_cover_group',
    'print_diameter',
    'factorize',
    'run_search',
    'list_claims',
    'verify',
]
