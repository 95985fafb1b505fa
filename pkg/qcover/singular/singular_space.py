"""The singular linear space: GF(q)^(n+l) with a distinguished l-dimensional
subspace W1, fixed here as the span of the last l coordinates.

With that choice the type of a subspace can be read off its canonical
basis: the rows whose pivot lies in the last l columns span P ∩ W1."""
import logging
from collections import namedtuple

from qcover.error.core_errors import InternalError
from qcover.error.count_error import ParameterRangeError
from qcover.error.subspace_error import AmbientMismatchError
from qcover.gfq.field import make_field
from qcover.qcount.gaussian import (check_type_condition, count_type,
                                    require_type_condition)
from qcover.subspace.enumeration import enumerate_subspaces
from qcover.subspace.subspace import coordinate_subspace, meet

SubspaceType = namedtuple("SubspaceType", ["m", "k"])


class SingularSpace:
    def __init__(self, spec, n, l):
        if n < 1 or l < 0:
            raise ParameterRangeError(f"singular space needs n >= 1 and "
                                      f"l >= 0, got n={n}, l={l}")
        self._spec = spec
        self._n = n
        self._l = l
        self._w1 = coordinate_subspace(spec, n + l, range(n, n + l))

    @property
    def spec(self):
        return self._spec

    @property
    def n(self):
        return self._n

    @property
    def l(self):
        return self._l

    @property
    def ambient(self):
        return self._n + self._l

    @property
    def w1(self):
        return self._w1

    def __eq__(self, other):
        return isinstance(other, SingularSpace) and \
            (self._spec, self._n, self._l) == (other._spec, other._n,
                                               other._l)

    def __hash__(self):
        return hash((self._spec, self._n, self._l))

    def __repr__(self):
        return f"{self.__class__.__name__}({self._spec!r}, n={self._n}, " \
               f"l={self._l})"


def make_singular_space(q, n, l):
    return SingularSpace(make_field(q), n, l)


def _check_in_space(sing, sub):
    if sub.spec != sing.spec or sub.ambient != sing.ambient:
        raise AmbientMismatchError(
            f"subspace of {sub.spec}^{sub.ambient} is not in the singular "
            f"space {sing.spec}^{sing.ambient}")


def type_of(sing, sub):
    """(dim P, dim(P ∩ W1)).

    Throws:
        AmbientMismatchError: if P is not in the singular space.
    """
    _check_in_space(sing, sub)
    return SubspaceType(sub.dim,
                        sum(1 for pivot in sub.pivots if pivot >= sing.n))


def make_typed_subspace(sing, dim, k):
    """Span of the first dim-k standard vectors outside W1 and the first k
    standard vectors of W1.

    Throws:
        InfeasibleTypeError: if no subspace of type (dim, k) exists.
    """
    require_type_condition(dim, k, dim, k, sing.n, sing.l)
    indices = list(range(dim - k)) + list(range(sing.n, sing.n + k))
    return coordinate_subspace(sing.spec, sing.ambient, indices)


def w1_part(sing, sub):
    """X ∩ W1."""
    _check_in_space(sing, sub)
    return meet(sub, sing.w1)


def enumerate_type(sing, space, m, k):
    """Yields every m-subspace P of space with dim(P ∩ W1) = k, in the
    canonical enumeration order of space. When the type is feasible the
    number yielded is checked against count_type on exhaustion."""
    _check_in_space(sing, space)
    if not (0 <= m <= space.dim):
        return iter(())
    return _enumerate_type(sing, space, m, k)


def _enumerate_type(sing, space, m, k):
    (m_space, k_space) = type_of(sing, space)
    yielded = 0
    for sub in enumerate_subspaces(space, m):
        if type_of(sing, sub).k == k:
            yielded += 1
            yield sub
    if check_type_condition(m, k, m_space, k_space, sing.n,
                            sing.l) is None:
        expected = count_type(m, k, m_space, k_space, sing.n, sing.l,
                              sing.spec.q)
    else:
        expected = 0
    if yielded != expected:
        raise InternalError(f"enumerated {yielded} subspaces of type "
                            f"({m},{k}), formula gives {expected}")
    logging.debug(f"Enumerated {yielded} type-({m},{k}) subspaces of a "
                  f"type-({m_space},{k_space}) subspace")
