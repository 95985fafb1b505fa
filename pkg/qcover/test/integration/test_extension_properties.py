import pytest

from qcover.family.covering import covering_number
from qcover.family.extension import corollary22_bound_holds, lemma21_extend
from qcover.family.family import Family, count_through, span_family
from qcover.gfq.field import make_field
from qcover.qcount.gaussian import point_count
from qcover.search.max_family import max_family
from qcover.singular.extremal import (construct_extremal_thm12,
                                      construct_trivial)
from qcover.subspace.enumeration import enumerate_subspaces
from qcover.subspace.subspace import (contains, coordinate_subspace,
                                      intersects, span_of, standard_vector)


def _extremal(q, m):
    return construct_extremal_thm12(make_field(q), 2 * m - 1, m)


def _trivial(q, ambient, m):
    spec = make_field(q)
    point = span_of(spec, ambient, [standard_vector(ambient, 0)])
    return construct_trivial(spec, ambient, m, point)


_TAU_M_FAMILIES = {
    "extremal-2-2": lambda: _extremal(2, 2),
    "extremal-3-2": lambda: _extremal(3, 2),
    "extremal-2-3": lambda: _extremal(2, 3),
    "extremal-3-3": lambda: _extremal(3, 3),
}

_TRIVIAL_FAMILIES = {
    "trivial-2-4-2": lambda: _trivial(2, 4, 2),
    "trivial-3-4-2": lambda: _trivial(3, 4, 2),
    "trivial-2-5-3": lambda: _trivial(2, 5, 3),
}


@pytest.fixture(scope="module")
def search_optima():
    return max_family(2, 4, 2, 2).optima


def _check_extension_bound(family):
    """Runs lemma21_extend from every subspace of X of dimension below m
    that misses some member; returns how many starts were checked."""
    factor = point_count(family.m, family.spec.q)
    checked = 0
    for dim in range(family.m):
        for sub in enumerate_subspaces(span_family(family), dim):
            if all(intersects(sub, member) for member in family):
                continue
            extended = lemma21_extend(family, sub)
            assert extended.dim == dim + 1
            assert contains(extended, sub)
            assert count_through(family, extended) * factor >= \
                count_through(family, sub)
            checked += 1
    return checked


def _check_bound_everywhere(family):
    space = span_family(family)
    for dim in range(space.dim + 1):
        for sub in enumerate_subspaces(space, dim):
            assert corollary22_bound_holds(family, sub)


class TestLemma21Exhaustive:
    @pytest.mark.parametrize("name", sorted(_TAU_M_FAMILIES))
    def test_extremal(self, name):
        family = _TAU_M_FAMILIES[name]()
        # tau = m, so every subspace below m misses some member
        space = span_family(family)
        expected = sum(
            len(list(enumerate_subspaces(space, dim)))
            for dim in range(family.m))
        assert _check_extension_bound(family) == expected

    @pytest.mark.parametrize("name", sorted(_TRIVIAL_FAMILIES))
    def test_trivial(self, name):
        assert _check_extension_bound(_TRIVIAL_FAMILIES[name]()) > 0

    def test_search_optima(self, search_optima):
        for family in search_optima:
            assert _check_extension_bound(family) > 0


class TestCorollary22Bound:
    @pytest.mark.parametrize("name", sorted(_TAU_M_FAMILIES))
    def test_extremal(self, name):
        _check_bound_everywhere(_TAU_M_FAMILIES[name]())

    def test_search_optima(self, search_optima):
        for family in search_optima:
            _check_bound_everywhere(family)


class TestTauForcesLargeSpan:
    @pytest.mark.parametrize("name", sorted(_TAU_M_FAMILIES))
    def test_extremal(self, name):
        family = _TAU_M_FAMILIES[name]()
        assert covering_number(family).tau == family.m
        assert span_family(family).dim >= 2 * family.m - 1

    def test_search_optima(self, search_optima):
        for family in search_optima:
            assert covering_number(family).tau == family.m
            assert span_family(family).dim >= 2 * family.m - 1

    @pytest.mark.parametrize("name", sorted(_TRIVIAL_FAMILIES))
    def test_trivial_is_below_m(self, name):
        family = _TRIVIAL_FAMILIES[name]()
        assert covering_number(family).tau < family.m

    @pytest.mark.parametrize(("q", "m"), ((2, 2), (3, 2), (2, 3), (3, 3)))
    def test_small_span_has_small_cover(self, q, m):
        # all m-subspaces of a (2m-2)-space: intersecting, but tau < m
        spec = make_field(q)
        space = coordinate_subspace(spec, 2 * m - 1, list(range(2 * m - 2)))
        family = Family(enumerate_subspaces(space, m), spec, 2 * m - 1, m)
        assert covering_number(family).tau < m
        assert span_family(family).dim == 2 * m - 2
