import itertools

import pytest

from qcover.gfq.field import make_field
from qcover.qcount.gaussian import check_type_condition, count_type, gaussian
from qcover.singular.singular_space import SingularSpace, enumerate_type
from qcover.subspace.enumeration import enumerate_subspaces
from qcover.subspace.subspace import full_space


class TestEnumerationMatchesGaussian:
    @pytest.mark.parametrize("q", (2, 3))
    def test_all_dimensions(self, q):
        spec = make_field(q)
        for ambient in range(1, 6):
            space = full_space(spec, ambient)
            for dim in range(ambient + 1):
                subs = list(enumerate_subspaces(space, dim))
                assert len(subs) == gaussian(ambient, dim, q)
                assert len(set(subs)) == len(subs)


class TestTypeCountsMatchEnumeration:
    @pytest.mark.parametrize(("q", "max_ambient"), ((2, 5), (3, 4)))
    def test_full_space(self, q, max_ambient):
        spec = make_field(q)
        for ambient in range(1, max_ambient + 1):
            for l in range(ambient):
                sing = SingularSpace(spec, ambient - l, l)
                space = full_space(spec, ambient)
                for (m, k) in itertools.product(range(ambient + 1),
                                                range(l + 1)):
                    # enumerate_type checks the formula on exhaustion
                    found = sum(1 for _ in enumerate_type(sing, space, m, k))
                    assert found == count_type(m, k, ambient, l, sing.n, l,
                                               q)

    def test_inside_typed_subspaces(self):
        spec = make_field(2)
        sing = SingularSpace(spec, 2, 2)
        for dim in range(5):
            for space in enumerate_subspaces(full_space(spec, 4), dim):
                for (m, k) in itertools.product(range(dim + 1), repeat=2):
                    found = sum(1 for _ in enumerate_type(sing, space, m, k))
                    assert (found > 0) == (check_type_condition(
                        m, k, space.dim,
                        sum(1 for pivot in space.pivots if pivot >= 2), 2,
                        2) is None)
