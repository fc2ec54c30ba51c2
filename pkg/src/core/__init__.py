# Shared infrastructure: errors, configuration, caching, parallel helpers

from .errors import (
    DeskError,
    DomainError,
    ExactZeroDivisionError,
    UnsupportedFrobeniusError,
    DataFileError,
    PrecisionError,
    UsageError,
)
from .cache import ComputationCache, computation_cache
from .parallel import ordered_map

__all__ = [
    "DeskError",
    "DomainError",
    "ExactZeroDivisionError",
    "UnsupportedFrobeniusError",
    "DataFileError",
    "PrecisionError",
    "UsageError",
    "ComputationCache",
    "computation_cache",
    "ordered_map",
]
