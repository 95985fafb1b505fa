import functools
from collections import namedtuple

from qcover.error.family_error import EmptyFamilyError, MixedFamilyError
from qcover.error.subspace_error import AmbientMismatchError
from qcover.subspace.enumeration import enumerate_points
from qcover.subspace.subspace import contains, join, zero_subspace

IntersectingResult = namedtuple("IntersectingResult", ["holds", "pair"])


def check_member_space(method):
    """Decorator to ensure a Subspace arg lives in the same field and ambient
    space as the Family it is combined with."""
    @functools.wraps(method)
    def _check_member_space(family, sub, *args, **kwargs):
        if sub.spec != family.spec or sub.ambient != family.ambient:
            raise AmbientMismatchError(
                f"subspace of {sub.spec}^{sub.ambient} used with a family in "
                f"{family.spec}^{family.ambient}")
        return method(family, sub, *args, **kwargs)

    return _check_member_space


class Family:
    """A duplicate-free set of equal-dimension subspaces of one ambient space.

    Members are held sorted by their canonical basis, so two families built
    from the same subspaces in any order compare equal. An empty family needs
    spec, ambient and m given explicitly; for a non-empty one they are read
    off the members and checked.

    The point incidence structure over the span of the members is built on
    first use and cached, since the covering solver, the extension step and
    the intersecting check all share it."""
    def __init__(self, members, spec=None, ambient=None, m=None):
        members = sorted(set(members), key=lambda member: member.key)
        (self._spec, self._ambient, self._m) = \
            self._validate_and_return_shape(members, spec, ambient, m)
        self._members = tuple(members)
        self._index = {member: idx for (idx, member) in enumerate(members)}
        self._incidence = None

    def _validate_and_return_shape(self, members, spec, ambient, m):
        if not members:
            if spec is None or ambient is None or m is None:
                raise EmptyFamilyError(
                    "an empty family needs explicit spec, ambient and m")
            return (spec, ambient, m)
        first = members[0]
        shape = (first.spec, first.ambient, first.dim)
        for (expected, given) in zip(shape, (spec, ambient, m)):
            if given is not None and given != expected:
                raise MixedFamilyError(f"declared {given}, members have "
                                       f"{expected}")
        for member in members[1:]:
            if (member.spec, member.ambient, member.dim) != shape:
                raise MixedFamilyError(
                    f"member {member} does not match {first.dim}-subspaces "
                    f"of {first.spec}^{first.ambient}")
        return shape

    @property
    def spec(self):
        return self._spec

    @property
    def ambient(self):
        return self._ambient

    @property
    def m(self):
        return self._m

    @property
    def members(self):
        return self._members

    @property
    def incidence(self):
        if self._incidence is None:
            from .incidence import PointIncidence
            self._incidence = PointIncidence(self)
        return self._incidence

    def index_of(self, member):
        return self._index[member]

    def __len__(self):
        return len(self._members)

    def __contains__(self, member):
        return member in self._index

    def __iter__(self):
        return iter(self._members)

    def __eq__(self, other):
        return isinstance(other, Family) and self._spec == other._spec and \
            self._ambient == other._ambient and self._m == other._m and \
            self._members == other._members

    def __hash__(self):
        return hash((self._spec, self._ambient, self._m, self._members))

    def __repr__(self):
        return f"{self.__class__.__name__}({list(self._members)!r})"

    def __str__(self):
        return "{ " + ",\n".join([str(member) for member in self._members]) \
                + " }"


def is_intersecting(family):
    """IntersectingResult(True, None) if every two members meet, else
    (False, (A, B)) for the first non-meeting pair in canonical order."""
    if not len(family):
        return IntersectingResult(True, None)
    incidence = family.incidence
    for idx in range(len(family)):
        later = incidence.full_mask & ~((1 << (idx + 1)) - 1)
        missed = later & ~incidence.members_meeting(idx)
        if missed:
            other = (missed & -missed).bit_length() - 1
            return IntersectingResult(False, (family.members[idx],
                                              family.members[other]))
    return IntersectingResult(True, None)


def span_family(family):
    """X, the sum of all members.

    Throws:
        EmptyFamilyError: if the family has no members.
    """
    if not len(family):
        raise EmptyFamilyError("the span of an empty family is undefined")
    result = zero_subspace(family.spec, family.ambient)
    for member in family:
        if not contains(result, member):
            result = join(result, member)
        if result.dim == family.ambient:
            break
    return result


@check_member_space
def sub_family_through(family, sub):
    """F_A, the members containing sub, in canonical order."""
    if sub.dim == 0 or not len(family):
        return family
    mask = family.incidence.members_containing(sub)
    members = [
        member for (idx, member) in enumerate(family.members)
        if mask >> idx & 1
    ]
    return Family(members, family.spec, family.ambient, family.m)


@check_member_space
def count_through(family, sub):
    """|F_A| without building the subfamily."""
    if sub.dim == 0 or not len(family):
        return len(family)
    return bin(family.incidence.members_containing(sub)).count("1")


def common_points(family):
    """Every point lying in all members, in canonical order."""
    if not len(family):
        raise EmptyFamilyError("common points of an empty family")
    first = family.members[0]
    return [
        point for point in enumerate_points(first)
        if count_through(family, point) == len(family)
    ]
