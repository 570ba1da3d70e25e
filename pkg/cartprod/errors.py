"""Exceptions raised by cartprod operations."""


class CartprodError(Exception):
    """Base class for every error this package raises."""


class DimensionError(CartprodError, ValueError):
    """Operand shapes do not satisfy an operation's precondition."""


class CapacityError(CartprodError):
    """A result would hold more entries than the configured capacity."""


class ScalarOverflowError(CartprodError, ArithmeticError):
    """Exact arithmetic left the signed 64-bit range."""


class ModeError(CartprodError, TypeError):
    """An exact operation received an approximate value (or a non-number)."""


class ConnectivityError(CartprodError):
    """A graph operation that needs a connected graph got a disconnected one."""


class SymmetryError(CartprodError):
    """The eigensolver received a matrix that is not real symmetric."""


class ConvergenceError(CartprodError):
    """The eigensolver hit its sweep cap before converging."""


class ParseError(CartprodError):
    """An input file does not follow the Matrix JSON or edge-list format."""


class ConfigError(CartprodError):
    """Invalid configuration value."""


class UnknownSuiteError(CartprodError):
    """Requested verification suite is not registered."""


class GraphError(CartprodError, ValueError):
    """Invalid graph: self-loop, duplicate edge or vertex index out of range."""
