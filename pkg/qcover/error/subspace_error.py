from .core_errors import QCoverError


class SubspaceError(QCoverError):
    pass


class AmbientMismatchError(SubspaceError):
    """Indicates subspaces over different fields or ambient dimensions were
    combined."""
    pass


class DimensionRangeError(SubspaceError):
    """Indicates a requested dimension outside the admissible range."""
    pass


class NotContainedError(SubspaceError):
    """Indicates a containment precondition (S within X) failed."""
    pass
