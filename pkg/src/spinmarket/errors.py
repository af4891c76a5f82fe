"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: ConfigError -> 1, DataError -> 2,
anything else -> 3.
"""


class SpinMarketError(Exception):
    """Base class for all package errors."""


class ConfigError(SpinMarketError):
    """Invalid configuration: bad key, bad value, violated invariant."""


class DataError(SpinMarketError):
    """Invalid or degenerate input data (history files, statistics inputs)."""
