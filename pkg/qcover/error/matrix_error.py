from .core_errors import QCoverError


class MatrixError(QCoverError):
    pass


class MalformedMatrixError(MatrixError):
    """Indicates ragged rows or an entry count not matching the shape."""
    pass
