"""Point/member incidence of a family over the span X of its members.

Points of X are indexed in canonical enumeration order and sets of points or
members are Python ints used as bitmasks, so "does T meet M" becomes a
single AND. All of the exact searches run on this structure."""
import logging

from qcover.error.subspace_error import NotContainedError
from qcover.subspace.enumeration import point_vectors

from .family import span_family


def iter_bits(mask):
    """Indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")


def normalize(spec, vector):
    """Scales a nonzero vector so its leading entry is 1."""
    for entry in vector:
        if entry:
            return spec.scale_vec(spec.inv(entry), vector)
    raise ValueError("the zero vector spans no point")


class PointIncidence:
    def __init__(self, family):
        self._spec = family.spec
        self._space = span_family(family)
        self._points = tuple(point_vectors(self._space))
        self._point_index = {
            vector: idx
            for (idx, vector) in enumerate(self._points)
        }
        self._member_points = tuple(self.point_mask(member)
                                    for member in family)
        point_members = [0] * len(self._points)
        for (idx, mask) in enumerate(self._member_points):
            for point_idx in iter_bits(mask):
                point_members[point_idx] |= 1 << idx
        self._point_members = tuple(point_members)
        self._full_mask = (1 << len(self._member_points)) - 1
        self._meeting = {}
        logging.debug(f"Incidence built: {len(self._points)} points of a "
                      f"{self._space.dim}-dimensional span, "
                      f"{len(self._member_points)} members")

    @property
    def space(self):
        return self._space

    @property
    def num_points(self):
        return len(self._points)

    @property
    def num_members(self):
        return len(self._member_points)

    @property
    def full_mask(self):
        return self._full_mask

    def point_vector(self, point_idx):
        return self._points[point_idx]

    def member_points(self, member_idx):
        return self._member_points[member_idx]

    def point_members(self, point_idx):
        return self._point_members[point_idx]

    def index_of_vector(self, vector):
        """Index of the point spanned by vector, or None if that point is
        not in X."""
        return self._point_index.get(normalize(self._spec, tuple(vector)))

    def point_mask(self, sub):
        """Points of X lying in sub.

        Throws:
            NotContainedError: if sub is not inside X.
        """
        mask = 0
        for vector in point_vectors(sub):
            try:
                mask |= 1 << self._point_index[vector]
            except KeyError:
                raise NotContainedError(f"{sub} is not inside the span "
                                        f"{self._space}")
        return mask

    def members_covered(self, points):
        """Members meeting at least one of the given points."""
        covered = 0
        for point_idx in iter_bits(points):
            covered |= self._point_members[point_idx]
        return covered

    def members_meeting(self, member_idx):
        try:
            return self._meeting[member_idx]
        except KeyError:
            covered = self.members_covered(self._member_points[member_idx])
            self._meeting[member_idx] = covered
            return covered

    def members_containing(self, sub):
        """Members containing sub: a member contains sub iff it contains the
        point of every basis row of sub."""
        mask = self._full_mask
        for row in sub.rows:
            point_idx = self._point_index.get(row)
            if point_idx is None:
                return 0
            mask &= self._point_members[point_idx]
        return mask
