from .core_errors import QCoverError


class FormatError(QCoverError):
    pass


class FamilyFileError(FormatError):
    """Indicates a malformed family file."""
    pass


class CertificateError(FormatError):
    """Indicates a malformed certificate file."""
    pass
