"""
Exception hierarchy shared by the services and the command line.

Each error carries a human-readable message naming the violated quantity;
the CLI maps the classes onto exit codes.
"""


class TrayTransportError(Exception):
    """Base class for every error raised by the package."""


class InvalidParameterError(TrayTransportError, ValueError):
    """An input value lies outside its documented domain."""


class SingularConfigurationError(TrayTransportError):
    """The contact force normal to the tray vanishes, so no pressure center exists."""


class InfeasiblePhaseError(TrayTransportError):
    """An acceleration phase cannot reach its velocity target."""


class InfeasibleDistanceError(TrayTransportError):
    """The target distance is shorter than any plannable displacement."""


class ConfigError(TrayTransportError):
    """A run configuration file is missing, malformed or violates the schema."""


class TrajectoryFormatError(TrayTransportError):
    """A trajectory file does not follow the emitted CSV format."""
