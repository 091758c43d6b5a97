"""Exception hierarchy shared by all modules.

Each class carries the CLI exit code it maps to.
"""


class BoltError(Exception):
    exit_code = 1


class EdgeListParseError(BoltError, ValueError):
    exit_code = 2

    def __init__(self, lineno, line):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: expected two labels, got {line!r}")


class ConfigError(BoltError, ValueError):
    exit_code = 3


class EmptyGraphError(BoltError, ValueError):
    exit_code = 4


class UndefinedMetricError(BoltError, ArithmeticError):
    exit_code = 5


class EmptySupportError(BoltError, ValueError):
    """Raised when a sampling distribution would have no node to draw."""

    exit_code = 3
