from .core_errors import QCoverError


class FamilyError(QCoverError):
    pass


class EmptyFamilyError(FamilyError):
    pass


class MixedFamilyError(FamilyError):
    """Indicates members of differing dimension, field or ambient space."""
    pass


class HypothesisError(FamilyError):
    """Indicates the hypothesis of an extension step does not hold."""
    pass


class OracleSizeError(FamilyError):
    """Indicates the brute-force oracle would enumerate too many
    subspaces."""
    pass


class BoundViolationError(FamilyError):
    """Indicates a counting bound failed on the given family."""
    pass
