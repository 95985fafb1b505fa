"""Constructors for the trivial and extremal families and their checks."""
import logging
from collections import namedtuple

from qcover.error.count_error import ParameterRangeError
from qcover.error.family_error import EmptyFamilyError
from qcover.error.subspace_error import (AmbientMismatchError,
                                         DimensionRangeError)
from qcover.family.covering import covering_number
from qcover.family.family import Family, is_intersecting, span_family
from qcover.qcount.gaussian import (count_type, eq99_t, gaussian,
                                    require_type_condition)
from qcover.subspace.enumeration import enumerate_subspaces
from qcover.subspace.subspace import coordinate_subspace, join, span_of

from .singular_space import (enumerate_type, make_typed_subspace, type_of,
                             w1_part)

ReportItem = namedtuple("ReportItem", ["name", "passed", "detail"])


class ExtremalReport:
    """Pass/fail per check, in the order they were run."""
    def __init__(self, items):
        self._items = tuple(items)

    @property
    def items(self):
        return self._items

    @property
    def passed(self):
        return all(item.passed for item in self._items)

    def __getitem__(self, name):
        for item in self._items:
            if item.name == name:
                return item
        raise KeyError(name)

    def __str__(self):
        return "\n".join(f"{item.name}: {'PASS' if item.passed else 'FAIL'}"
                         f" ({item.detail})" for item in self._items)


def construct_trivial(spec, n_amb, m, point):
    """All m-subspaces through a point, built as p + U for U ranging over
    the (m-1)-subspaces of a coordinate complement H of p.

    Throws:
        DimensionRangeError: if point is not 1-dimensional or m is not in
            [1, n_amb].
    """
    if point.dim != 1:
        raise DimensionRangeError(f"a trivial family needs a point, got a "
                                  f"{point.dim}-subspace")
    if point.spec != spec or point.ambient != n_amb:
        raise AmbientMismatchError(f"point not in {spec}^{n_amb}")
    if not (1 <= m <= n_amb):
        raise DimensionRangeError(f"m={m} outside [1, {n_amb}]")
    complement = coordinate_subspace(
        spec, n_amb, [idx for idx in range(n_amb) if idx != point.pivots[0]])
    members = [
        join(point, sub) for sub in enumerate_subspaces(complement, m - 1)
    ]
    logging.info(f"Trivial family: {len(members)} {m}-subspaces through "
                 f"{point}")
    return Family(members, spec, n_amb, m)


def construct_extremal_thm12(spec, n_amb, m):
    """[X m] for X the span of the first 2m-1 standard vectors.

    Throws:
        ParameterRangeError: if m < 2.
        DimensionRangeError: if n_amb < 2m-1.
    """
    if m < 2:
        raise ParameterRangeError(f"extremal families need m >= 2, got {m}")
    if n_amb < 2 * m - 1:
        raise DimensionRangeError(f"ambient dimension {n_amb} below "
                                  f"2m-1 = {2 * m - 1}")
    space = coordinate_subspace(spec, n_amb, range(2 * m - 1))
    family = Family(enumerate_subspaces(space, m), spec, n_amb, m)
    logging.info(f"Extremal family [X {m}] over {spec}: {len(family)} "
                 f"members")
    return family


def extremal_span_thm31(sing, m, k):
    """The type-(2m-1, t) subspace X with t from eq99_t.

    Throws:
        InfeasibleTypeError: naming the violated clause when X or type
            (m, k) inside X cannot exist.
    """
    t = eq99_t(m, k, sing.n)
    require_type_condition(2 * m - 1, t, 2 * m - 1, t, sing.n, sing.l)
    require_type_condition(m, k, 2 * m - 1, t, sing.n, sing.l)
    return make_typed_subspace(sing, 2 * m - 1, t)


def construct_extremal_thm31(sing, m, k):
    """[X m,k] for X of type (2m-1, t), t from eq99_t."""
    if m < 2:
        raise ParameterRangeError(f"extremal families need m >= 2, got {m}")
    space = extremal_span_thm31(sing, m, k)
    family = Family(enumerate_type(sing, space, m, k), sing.spec,
                    sing.ambient, m)
    logging.info(f"Extremal family [X {m},{k}] with X of type "
                 f"{tuple(type_of(sing, space))}: {len(family)} members")
    return family


def _uniform_type(sing, family):
    types = {type_of(sing, member).k for member in family}
    return types.pop() if len(types) == 1 else None


def extremal_size(family, sing=None):
    """Size of the extremal family the given one is compared with, or None
    if no formula applies (members of mixed type)."""
    (m, q) = (family.m, family.spec.q)
    if sing is None:
        return gaussian(2 * m - 1, m, q)
    k = _uniform_type(sing, family)
    if k is None:
        return None
    t = eq99_t(m, k, sing.n)
    return count_type(m, k, 2 * m - 1, t, sing.n, sing.l, q)


def verify_extremal(family, sing=None, jobs=None, node_budget=None):
    """Runs the four extremality checks: intersecting, tau = m, size equal
    to the applicable formula, span of dimension 2m-1 (and of type
    (2m-1, t) in the singular space). Failures are carried in the report.

    Throws:
        EmptyFamilyError: if the family has no members.
    """
    if not len(family):
        raise EmptyFamilyError("cannot verify an empty family")
    m = family.m
    items = []
    intersecting = is_intersecting(family)
    items.append(ReportItem("intersecting", intersecting.holds,
                            "all pairs meet" if intersecting.holds else
                            f"{intersecting.pair[0]} and "
                            f"{intersecting.pair[1]} meet trivially"))
    cover = covering_number(family, jobs=jobs, node_budget=node_budget)
    items.append(ReportItem("tau", cover.exact and cover.tau == m,
                            f"tau={cover.tau}, m={m}" +
                            ("" if cover.exact else ", budget exhausted")))
    expected = extremal_size(family, sing)
    items.append(ReportItem("size", expected == len(family),
                            f"|F|={len(family)}, formula={expected}"))
    space = span_family(family)
    span_ok = space.dim == 2 * m - 1
    detail = f"dim X={space.dim}"
    if sing is not None:
        k = _uniform_type(sing, family)
        span_type = type_of(sing, space)
        detail += f", type {tuple(span_type)}"
        span_ok = span_ok and k is not None and \
            span_type.k == eq99_t(m, k, sing.n)
    items.append(ReportItem("span", span_ok, detail))
    report = ExtremalReport(items)
    logging.info("Extremality checks " +
                 ("passed" if report.passed else "failed"))
    return report


def structure_check(family, sing=None):
    """True iff the family is all of [X m] (all of [X m,k] in the singular
    space) for X its span. Members are distinct subspaces of X, so comparing
    cardinalities is enough."""
    if not len(family):
        raise EmptyFamilyError("cannot check the structure of an empty "
                               "family")
    space = span_family(family)
    (m, q) = (family.m, family.spec.q)
    if sing is None:
        return len(family) == gaussian(space.dim, m, q)
    k = _uniform_type(sing, family)
    if k is None:
        return False
    span_type = type_of(sing, space)
    return len(family) == count_type(m, k, span_type.m, span_type.k, sing.n,
                                     sing.l, q)


def short_cover_for_type(sing, space, k):
    """A (t-k+1)-subspace Z of X ∩ W1, t = dim(X ∩ W1). Every subspace of
    type (m, k) inside X meets Z, since its k-dimensional part in W1 and Z
    both lie in the t-dimensional X ∩ W1.

    Throws:
        DimensionRangeError: if k is not in [1, t].
    """
    w1_meet = w1_part(sing, space)
    t = w1_meet.dim
    if not (1 <= k <= t):
        raise DimensionRangeError(f"k={k} outside [1, {t}]")
    return span_of(sing.spec, sing.ambient, w1_meet.rows[:t - k + 1])
