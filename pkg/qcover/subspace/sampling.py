"""Seeded random subspaces for property suites and the lemma37 command."""
from qcover.error.subspace_error import DimensionRangeError

from .subspace import span_of, zero_subspace


def _random_vector(spec, ambient, rng):
    return tuple(int(x) for x in rng.randint(0, spec.q, size=ambient))


def random_extension(sub, dim, rng, avoid=None):
    """Adjoins random vectors to sub until it has dimension dim.

    If avoid is given, every adjoined vector is also independent from
    avoid + current span, so the result meets avoid exactly where sub
    does."""
    spec = sub.spec
    ambient = sub.ambient
    current = sub
    guard = span_of(spec, ambient, sub.rows +
                    (avoid.rows if avoid is not None else ()))
    if guard.dim + (dim - sub.dim) > ambient:
        raise DimensionRangeError(f"cannot extend to dimension {dim} in "
                                  f"ambient dimension {ambient}")
    while current.dim < dim:
        vector = _random_vector(spec, ambient, rng)
        if not guard.contains_vector(vector):
            current = span_of(spec, ambient, current.rows + (vector, ))
            guard = span_of(spec, ambient, guard.rows + (vector, ))
    return current


def random_subspace(spec, ambient, dim, rng):
    return random_extension(zero_subspace(spec, ambient), dim, rng)


def random_pair_with_meet(spec, ambient, a, b, c, rng):
    """Random A, B with dim A = a, dim B = b and dim(A ∩ B) = c.

    Throws:
        DimensionRangeError: if the dimensions are inconsistent.
    """
    if not (0 <= c <= min(a, b)) or a + b - c > ambient:
        raise DimensionRangeError(f"no pair of dimensions {a}, {b} meeting "
                                  f"in dimension {c} inside ambient "
                                  f"dimension {ambient}")
    common = random_subspace(spec, ambient, c, rng)
    first = random_extension(common, a, rng)
    second = random_extension(common, b, rng, avoid=first)
    return first, second
