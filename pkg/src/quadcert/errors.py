"""Exception types shared across the package."""


class QuadcertError(Exception):
    """Base class for all quadcert errors."""


class ParameterError(QuadcertError, ValueError):
    """An argument violates an operation's precondition."""


class DomainError(QuadcertError, ValueError):
    """An evaluation point or interval falls outside a function's domain."""


class IntegrationError(QuadcertError, RuntimeError):
    """The adaptive integrator could not meet the requested tolerance."""
