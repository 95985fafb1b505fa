from .core_errors import QCoverError


class FieldError(QCoverError):
    pass


class NotPrimePowerError(FieldError):
    """Indicates a field size that is not a prime power, or is out of the
    supported range."""
    pass


class ZeroInverseError(FieldError):
    """Indicates an attempt to invert the zero element."""
    pass


class ElementRangeError(FieldError):
    """Indicates an element code outside [0, q)."""
    pass


class UnknownOperationError(FieldError):
    """Indicates an arithmetic operation name that is not supported, or a
    binary operation called with one operand."""
    pass
