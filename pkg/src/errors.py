"""
Exception hierarchy shared by every hyperjac module
"""


class HyperjacError(Exception):
    """Base class for all library errors"""


class DomainError(HyperjacError, ValueError):
    """Argument lies outside the region where the requested object is defined"""


class ConvergenceError(HyperjacError, RuntimeError):
    """An iterative method failed to reach its tolerance"""


class ConfigError(HyperjacError, ValueError):
    """Invalid command-line or configuration value"""
