"""Exception hierarchy shared across the package."""


class ExohandError(Exception):
    """Base class for all package errors."""


class ConfigError(ExohandError):
    """Invalid configuration: bad dimensions, unknown names, missing files."""


class ValidationError(ExohandError):
    """Data that parsed but violates an invariant (non-monotone time, NaN, ...)."""


class StepError(ExohandError):
    """Numerical failure during simulation stepping (non-finite inputs)."""


class UsageError(ExohandError):
    """API misuse, e.g. stepping an environment past its horizon."""
