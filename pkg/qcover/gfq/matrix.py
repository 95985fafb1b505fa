from collections import namedtuple

from qcover.error.matrix_error import MalformedMatrixError

RrefResult = namedtuple("RrefResult", ["matrix", "rank", "pivots"])


class Matrix:
    """Immutable matrix of field element codes, stored as a tuple of row
    tuples."""
    def __init__(self, rows, num_cols=None):
        self._rows = tuple(tuple(int(x) for x in row) for row in rows)
        if num_cols is None:
            if len(self._rows) == 0:
                raise MalformedMatrixError("column count of an empty matrix "
                                           "must be given")
            num_cols = len(self._rows[0])
        self._num_cols = int(num_cols)
        for row in self._rows:
            if len(row) != self._num_cols:
                raise MalformedMatrixError(
                    f"row of length {len(row)} in matrix with "
                    f"{self._num_cols} columns")

    @classmethod
    def from_entries(cls, num_rows, num_cols, entries):
        """Builds a matrix from a row-major list of entries."""
        entries = list(entries)
        if len(entries) != num_rows * num_cols:
            raise MalformedMatrixError(
                f"{len(entries)} entries do not fill a {num_rows}x{num_cols} "
                "matrix")
        rows = [
            entries[r * num_cols:(r + 1) * num_cols] for r in range(num_rows)
        ]
        return cls(rows, num_cols)

    @classmethod
    def identity(cls, size):
        return cls([[int(r == c) for c in range(size)] for r in range(size)],
                   size)

    @classmethod
    def zeros(cls, num_rows, num_cols):
        return cls([[0] * num_cols for _ in range(num_rows)], num_cols)

    @property
    def num_rows(self):
        return len(self._rows)

    @property
    def num_cols(self):
        return self._num_cols

    @property
    def rows(self):
        return self._rows

    @property
    def entries(self):
        return [x for row in self._rows for x in row]

    def transpose(self):
        return Matrix([[row[c] for row in self._rows]
                       for c in range(self._num_cols)], self.num_rows)

    def __eq__(self, other):
        return isinstance(other, Matrix) and \
            self._num_cols == other._num_cols and self._rows == other._rows

    def __hash__(self):
        return hash((self._num_cols, self._rows))

    def __repr__(self):
        return f"{self.__class__.__name__}({[list(r) for r in self._rows]!r}" \
               f", {self._num_cols!r})"

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self._rows)


def rref_rows(spec, rows, num_cols):
    """Row reduces a list of row tuples.

    Returns (basis_rows, pivots): the nonzero rows of the reduced row echelon
    form and their pivot columns, strictly increasing."""
    work = [list(row) for row in rows]
    pivots = []
    rank = 0
    for col in range(num_cols):
        pivot_row = None
        for r in range(rank, len(work)):
            if work[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        lead = work[rank][col]
        if lead != 1:
            work[rank] = list(spec.scale_vec(spec.inv(lead), work[rank]))
        pivot_vec = work[rank]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                factor = spec.neg(work[r][col])
                work[r] = list(spec.axpy(factor, pivot_vec, work[r]))
        pivots.append(col)
        rank += 1
        if rank == len(work):
            break
    return [tuple(row) for row in work[:rank]], pivots


def mat_rref(spec, matrix):
    """Reduced row echelon form of the matrix.

    The returned matrix holds only the rank nonzero rows; pivot entries are
    1 with zeros above and below, pivot columns strictly increasing."""
    basis, pivots = rref_rows(spec, matrix.rows, matrix.num_cols)
    return RrefResult(Matrix(basis, matrix.num_cols), len(pivots),
                      tuple(pivots))


def kernel_rows(spec, reduced_rows, pivots, num_cols):
    """Right null space basis from an already reduced system."""
    pivot_set = set(pivots)
    basis = []
    for free_col in range(num_cols):
        if free_col in pivot_set:
            continue
        vector = [0] * num_cols
        vector[free_col] = 1
        for (row, pivot_col) in zip(reduced_rows, pivots):
            vector[pivot_col] = spec.neg(row[free_col])
        basis.append(tuple(vector))
    return basis


def mat_kernel(spec, matrix):
    """Basis of the right null space {v : M v = 0}, one vector per row.

    The row count equals cols - rank."""
    reduced, pivots = rref_rows(spec, matrix.rows, matrix.num_cols)
    basis = kernel_rows(spec, reduced, pivots, matrix.num_cols)
    return Matrix(basis, matrix.num_cols)


def mat_rank(spec, matrix):
    return len(rref_rows(spec, matrix.rows, matrix.num_cols)[1])
