import functools

from qcover.error.core_errors import InternalError
from qcover.error.subspace_error import AmbientMismatchError
from qcover.gfq.matrix import Matrix, kernel_rows, rref_rows


def check_same_space(method):
    """Decorator to ensure all Subspace args (positional and keyword) live in
    the same field and ambient dimension before combining them."""
    @functools.wraps(method)
    def _check_same_space(*args, **kwargs):
        subspaces = [
            arg for arg in list(args) + list(kwargs.values())
            if isinstance(arg, Subspace)
        ]
        if subspaces:
            first = subspaces[0]
            for other in subspaces[1:]:
                if other.spec != first.spec or \
                        other.ambient != first.ambient:
                    raise AmbientMismatchError(
                        f"cannot combine subspace of {other.spec}^"
                        f"{other.ambient} with one of {first.spec}^"
                        f"{first.ambient}")
        return method(*args, **kwargs)

    return _check_same_space


class Subspace:
    """A subspace of GF(q)^N held by its canonical reduced row echelon basis.

    Since the basis is canonical, equality and hashing are plain data
    comparisons of (field, ambient, basis). Build instances with span_of();
    the constructor trusts its rows to be canonical already."""
    def __init__(self, spec, ambient, rows, pivots):
        self._spec = spec
        self._ambient = ambient
        self._rows = tuple(rows)
        self._pivots = tuple(pivots)
        self._hash = hash((spec, ambient, self._rows))

    @property
    def spec(self):
        return self._spec

    @property
    def ambient(self):
        return self._ambient

    @property
    def dim(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    @property
    def pivots(self):
        return self._pivots

    @property
    def basis(self):
        return Matrix(self._rows, self._ambient)

    @property
    def key(self):
        """Sort key giving the canonical order of subspaces."""
        return self._rows

    def contains_vector(self, vector):
        spec = self._spec
        residue = tuple(vector)
        for (row, pivot_col) in zip(self._rows, self._pivots):
            coeff = residue[pivot_col]
            if coeff:
                residue = spec.axpy(spec.neg(coeff), row, residue)
        return not any(residue)

    def __eq__(self, other):
        return isinstance(other, Subspace) and \
            self._hash == other._hash and self._spec == other._spec and \
            self._ambient == other._ambient and self._rows == other._rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.__class__.__name__}({self._spec!r}, " \
               f"{self._ambient!r}, {self._rows!r})"

    def __str__(self):
        if not self._rows:
            return "<0>"
        return "<" + "; ".join(" ".join(str(x) for x in row)
                               for row in self._rows) + ">"


def span_of(spec, ambient, vectors):
    """Canonical subspace spanned by the given row vectors.

    Throws:
        AmbientMismatchError: if a vector's length differs from ambient.
    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    for vector in vectors:
        if len(vector) != ambient:
            raise AmbientMismatchError(f"vector of length {len(vector)} in "
                                       f"ambient dimension {ambient}")
    basis, pivots = rref_rows(spec, vectors, ambient)
    return Subspace(spec, ambient, basis, pivots)


def zero_subspace(spec, ambient):
    return Subspace(spec, ambient, (), ())


def standard_vector(ambient, idx):
    return tuple(int(i == idx) for i in range(ambient))


def coordinate_subspace(spec, ambient, indices):
    """Span of the standard basis vectors with the given indices."""
    indices = sorted(set(indices))
    rows = [standard_vector(ambient, idx) for idx in indices]
    return Subspace(spec, ambient, rows, indices)


def full_space(spec, ambient):
    return coordinate_subspace(spec, ambient, range(ambient))


@check_same_space
def join(first, second):
    """The sum first + second."""
    return span_of(first.spec, first.ambient, first.rows + second.rows)


@check_same_space
def meet_dim(first, second):
    """dim(first ∩ second), via the modular law."""
    joined = rref_rows(first.spec, first.rows + second.rows, first.ambient)[1]
    return first.dim + second.dim - len(joined)


@check_same_space
def meet(first, second):
    """The intersection of two subspaces.

    Solves x·A + y·B = 0 for coefficient vectors over the stacked bases; the
    intersection is spanned by the vectors x·A. The modular law is checked
    against an independent join on every call."""
    spec = first.spec
    ambient = first.ambient
    stacked = first.rows + second.rows
    if not first.rows or not second.rows:
        result = zero_subspace(spec, ambient)
    else:
        transposed = [
            tuple(row[col] for row in stacked) for col in range(ambient)
        ]
        reduced, pivots = rref_rows(spec, transposed, len(stacked))
        coefficient_vecs = kernel_rows(spec, reduced, pivots, len(stacked))
        vectors = [
            spec.combine(coeffs[:first.dim], first.rows, ambient)
            for coeffs in coefficient_vecs
        ]
        result = span_of(spec, ambient, vectors)
    if result.dim + join(first, second).dim != first.dim + second.dim:
        raise InternalError(f"modular law failed for {first} and {second}")
    return result


@check_same_space
def contains(container, contained):
    """True iff contained ⊆ container."""
    if contained.dim > container.dim:
        return False
    return all(container.contains_vector(row) for row in contained.rows)


@check_same_space
def intersects(first, second):
    """True iff dim(first ∩ second) >= 1."""
    return meet_dim(first, second) >= 1
