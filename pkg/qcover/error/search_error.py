from qcover.constants import EXIT_GATE_EXCEEDED

from .core_errors import QCoverError


class SearchError(QCoverError):
    pass


class DeskScaleGateError(SearchError):
    """Indicates an instance has more vertices than the size gate allows."""
    exit_code = EXIT_GATE_EXCEEDED

    def __init__(self, num_vertices, gate):
        super().__init__(f"infeasible at desk scale: {num_vertices} "
                         f"subspaces exceed the size gate of {gate}")
        self._num_vertices = num_vertices
        self._gate = gate

    @property
    def num_vertices(self):
        return self._num_vertices

    @property
    def gate(self):
        return self._gate
