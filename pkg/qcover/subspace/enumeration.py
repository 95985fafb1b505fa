"""Enumeration of the subspace lattice of a subspace X.

Subspaces of X are listed through their reduced row echelon coefficient
matrices relative to the canonical basis of X: pivot sets in colexicographic
order, then free entries counted row-major. Because the basis of X is itself
reduced, the image of a reduced coefficient matrix is already the canonical
ambient basis, so no further row reduction is needed."""
import itertools

from qcover.error.subspace_error import DimensionRangeError, NotContainedError

from .subspace import Subspace, check_same_space, contains, span_of


def _colex_combinations(size, count):
    return sorted(itertools.combinations(range(size), count),
                  key=lambda combo: combo[::-1])


def _free_positions(pivot_set, size):
    pivot_lookup = set(pivot_set)
    return [(row_idx, col) for (row_idx, pivot_col) in enumerate(pivot_set)
            for col in range(pivot_col + 1, size) if col not in pivot_lookup]


def enumerate_subspaces(space, dim):
    """Yields every dim-subspace of space exactly once, in canonical
    enumeration order.

    Throws:
        DimensionRangeError: if dim is not in [0, space.dim].
    """
    if not (0 <= dim <= space.dim):
        raise DimensionRangeError(f"cannot enumerate {dim}-subspaces of a "
                                  f"{space.dim}-dimensional space")
    return _enumerate_subspaces(space, dim)


def _enumerate_subspaces(space, dim):
    spec = space.spec
    ambient = space.ambient
    size = space.dim
    basis = space.rows
    basis_pivots = space.pivots
    for pivot_set in _colex_combinations(size, dim):
        free = _free_positions(pivot_set, size)
        pivots = tuple(basis_pivots[idx] for idx in pivot_set)
        for values in itertools.product(range(spec.q), repeat=len(free)):
            coeff_rows = [[0] * size for _ in range(dim)]
            for (row_idx, pivot_col) in enumerate(pivot_set):
                coeff_rows[row_idx][pivot_col] = 1
            for ((row_idx, col), value) in zip(free, values):
                coeff_rows[row_idx][col] = value
            rows = [
                spec.combine(coeffs, basis, ambient) for coeffs in coeff_rows
            ]
            yield Subspace(spec, ambient, rows, pivots)


def point_vectors(space):
    """Normalized spanning vectors of the points of space, in canonical
    enumeration order (leading entry 1)."""
    for (_, vector) in _indexed_point_vectors(space):
        yield vector


def enumerate_points(space):
    """Yields every 1-subspace of space; (q^dim - 1)/(q - 1) of them."""
    spec = space.spec
    pivots = space.pivots
    for (lead_idx, vector) in _indexed_point_vectors(space):
        yield Subspace(spec, space.ambient, (vector, ), (pivots[lead_idx], ))


def _indexed_point_vectors(space):
    spec = space.spec
    basis = space.rows
    for lead_idx in range(space.dim):
        tail = basis[lead_idx + 1:]
        for coeffs in itertools.product(range(spec.q), repeat=len(tail)):
            yield lead_idx, spec.combine((1, ) + coeffs,
                                         (basis[lead_idx], ) + tail,
                                         space.ambient)


@check_same_space
def greedy_complement(sub, space, count):
    """The first count basis vectors of space, in order, that are
    independent from sub and from each other."""
    current = sub
    chosen = []
    for vector in space.rows:
        if len(chosen) == count:
            break
        if not current.contains_vector(vector):
            chosen.append(vector)
            current = span_of(sub.spec, sub.ambient, current.rows + (vector, ))
    if len(chosen) != count:
        raise DimensionRangeError(f"cannot add {count} independent vectors "
                                  f"to a {sub.dim}-subspace of a "
                                  f"{space.dim}-dimensional space")
    return chosen


@check_same_space
def extend_within(sub, space, dim):
    """A dim-subspace T with sub ⊆ T ⊆ space, built by greedily adjoining
    the basis vectors of space that are independent of the current span.

    Throws:
        NotContainedError: if sub is not inside space.
        DimensionRangeError: if dim is not in [sub.dim, space.dim].
    """
    if not contains(space, sub):
        raise NotContainedError(f"{sub} is not contained in {space}")
    if not (sub.dim <= dim <= space.dim):
        raise DimensionRangeError(f"cannot extend a {sub.dim}-subspace to "
                                  f"dimension {dim} inside a "
                                  f"{space.dim}-dimensional space")
    added = greedy_complement(sub, space, dim - sub.dim)
    return span_of(sub.spec, sub.ambient, sub.rows + tuple(added))


def enumerate_subspaces_by_key(space, dim):
    """Yields every dim-subspace of space exactly once, in increasing
    Subspace.key order.

    The basis of space is reduced, so ambient rows compare like their
    coefficient rows; the generator walks reduced coefficient matrices row
    by row, smallest first.

    Throws:
        DimensionRangeError: if dim is not in [0, space.dim].
    """
    if not (0 <= dim <= space.dim):
        raise DimensionRangeError(f"cannot enumerate {dim}-subspaces of a "
                                  f"{space.dim}-dimensional space")
    return _enumerate_subspaces_by_key(space, dim)


def _enumerate_subspaces_by_key(space, dim):
    spec = space.spec
    basis = space.rows
    for coeff_rows in _rref_rows_by_key(spec.q, space.dim, dim,
                                        frozenset(range(space.dim)), -1):
        rows = [
            spec.combine(coeffs, basis, space.ambient)
            for coeffs in coeff_rows
        ]
        pivots = tuple(space.pivots[row.index(1)] for row in coeff_rows)
        yield Subspace(spec, space.ambient, rows, pivots)


def _rref_rows_by_key(q, size, dim, pivot_cols, after):
    """Reduced dim x size matrices with pivots in pivot_cols beyond column
    after, as row tuples in lexicographic order. A later leading one sorts
    first, so pivot columns are tried from the right."""
    if dim == 0:
        yield ()
        return
    for lead in sorted((col for col in pivot_cols if col > after),
                       reverse=True):
        for tail in itertools.product(range(q), repeat=size - lead - 1):
            later = frozenset(col for col in pivot_cols
                              if col > lead and not tail[col - lead - 1])
            if len(later) < dim - 1:
                continue
            row = (0, ) * lead + (1, ) + tail
            for rest in _rref_rows_by_key(q, size, dim - 1, later, lead):
                yield (row, ) + rest
