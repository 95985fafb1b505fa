from .core_errors import QCoverError


class CountError(QCoverError):
    pass


class ParameterRangeError(CountError):
    """Indicates parameters outside the hypothesis of a formula or bound."""
    pass


class InfeasibleTypeError(CountError):
    """Indicates a subspace type that violates the feasibility condition for
    type counts; the message names the violated clause."""
    pass
