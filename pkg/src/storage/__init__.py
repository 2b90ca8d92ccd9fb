"""File formats of the command-line tool."""
from .files import (
    dump_csv,
    dump_document,
    load_ddf,
    load_metric,
    load_space,
    read_space,
    round_numbers,
    save_ddf,
    save_space,
)

__all__ = [
    "dump_csv",
    "dump_document",
    "load_ddf",
    "load_metric",
    "load_space",
    "read_space",
    "round_numbers",
    "save_ddf",
    "save_space",
]
