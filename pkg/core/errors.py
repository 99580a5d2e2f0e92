"""
Exceptions raised by the library and mapped to exit codes by the runner.
"""


class HasseError(ValueError):
    """Base class for every error this package raises on purpose."""

    exit_code = 3


class ConfigError(HasseError):
    """Invalid command-line parameters or unusable paths."""

    exit_code = 2


class DomainError(HasseError):
    """A library precondition was violated (bad q, bad family, bad range)."""


class BoundError(DomainError):
    """The base prime list is too small for the requested sieve range."""


class CheckpointError(HasseError):
    """Checkpoint file is malformed or belongs to a different search."""


class FixtureError(HasseError):
    """Fixture file could not be parsed; `problems` lists each bad row."""

    exit_code = 4

    def __init__(self, message: str, problems: list[str] | None = None):
        super().__init__(message)
        self.problems = problems or []
