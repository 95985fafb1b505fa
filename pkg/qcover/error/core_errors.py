from qcover.constants import EXIT_INVALID_INPUT, EXIT_PROPERTY_VIOLATED


class QCoverError(Exception):
    """Base error class for the package.

    exit_code is the status the command-line tool ends with when the error
    reaches it; most errors reject their input."""
    exit_code = EXIT_INVALID_INPUT

    def __init__(self, message=""):
        super().__init__(message)
        self._message = message

    @property
    def message(self):
        return self._message

    def __str__(self):
        return self._message


class InternalError(QCoverError):
    """A postcondition re-check failed: the computed object does not have
    the property it was built to have."""
    exit_code = EXIT_PROPERTY_VIOLATED
