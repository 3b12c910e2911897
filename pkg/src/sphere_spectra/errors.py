"""Exception hierarchy shared by all modules."""


class SpectraError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(SpectraError, ValueError):
    """Input has the wrong shape (e.g. weight length does not match the rank)."""


class DomainError(SpectraError, ValueError):
    """Input is well-formed but outside the domain of the operation."""


class PoleError(SpectraError, ArithmeticError):
    """A quotient or Gamma ratio hits a pole."""


class ConsistencyError(SpectraError):
    """Propagated eigenvalues violate a compressed intertwining relation."""
