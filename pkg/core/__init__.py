"""
Core module - arithmetic kernels, sieves, classifiers, and persistence.
"""

from core.errors import (
    BoundError,
    CheckpointError,
    ConfigError,
    DomainError,
    FixtureError,
    HasseError,
)

__all__ = [
    "HasseError",
    "ConfigError",
    "DomainError",
    "BoundError",
    "CheckpointError",
    "FixtureError",
]
