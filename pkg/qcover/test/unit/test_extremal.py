import pytest

from qcover.error.count_error import InfeasibleTypeError, ParameterRangeError
from qcover.error.family_error import EmptyFamilyError
from qcover.error.subspace_error import (AmbientMismatchError,
                                         DimensionRangeError)
from qcover.family.covering import CoverResult, covering_number
from qcover.family.family import Family, span_family
from qcover.singular.extremal import (construct_extremal_thm12,
                                      construct_extremal_thm31,
                                      construct_trivial, extremal_size,
                                      extremal_span_thm31,
                                      short_cover_for_type, structure_check,
                                      verify_extremal)
from qcover.singular.singular_space import (SingularSpace, enumerate_type,
                                            type_of)
from qcover.subspace.subspace import (coordinate_subspace, full_space,
                                      intersects)


@pytest.fixture
def sing_22(gf2):
    return SingularSpace(gf2, 2, 2)


@pytest.fixture
def typed_family(sing_22):
    return construct_extremal_thm31(sing_22, 2, 1)


class TestConstructTrivial:
    def test_fano_star(self, gf2, make_point):
        family = construct_trivial(gf2, 3, 2, make_point(gf2, 3, 0))
        assert len(family) == 3
        assert all(member.contains_vector((1, 0, 0)) for member in family)

    def test_gf3(self, gf3, make_point):
        assert len(construct_trivial(gf3, 4, 2, make_point(gf3, 4, 1))) == 13

    def test_m_one(self, gf2, make_point):
        point = make_point(gf2, 3, 2)
        assert construct_trivial(gf2, 3, 1, point).members == (point, )

    def test_not_a_point(self, gf2):
        with pytest.raises(DimensionRangeError):
            construct_trivial(gf2, 3, 2, coordinate_subspace(gf2, 3, [0, 1]))

    def test_bad_m(self, gf2, make_point):
        with pytest.raises(DimensionRangeError):
            construct_trivial(gf2, 3, 0, make_point(gf2, 3, 0))

    def test_point_elsewhere(self, gf2, make_point):
        with pytest.raises(AmbientMismatchError):
            construct_trivial(gf2, 3, 2, make_point(gf2, 4, 0))


class TestConstructExtremalThm12:
    def test_fano(self, fano_lines, gf2):
        assert len(fano_lines) == 7
        assert span_family(fano_lines) == full_space(gf2, 3)

    def test_gf3_in_larger_space(self, gf3):
        family = construct_extremal_thm12(gf3, 4, 2)
        assert len(family) == 13
        assert span_family(family) == coordinate_subspace(gf3, 4, [0, 1, 2])

    def test_m_one(self, gf2):
        with pytest.raises(ParameterRangeError):
            construct_extremal_thm12(gf2, 3, 1)

    def test_small_ambient(self, gf2):
        with pytest.raises(DimensionRangeError):
            construct_extremal_thm12(gf2, 4, 3)


class TestConstructExtremalThm31:
    def test_span(self, sing_22, gf2):
        space = extremal_span_thm31(sing_22, 2, 1)
        assert space == coordinate_subspace(gf2, 4, [0, 2, 3])
        assert type_of(sing_22, space) == (3, 2)

    def test_members(self, typed_family, sing_22):
        assert len(typed_family) == 6
        assert all(
            type_of(sing_22, member) == (2, 1) for member in typed_family)
        assert covering_number(typed_family).tau == 2

    def test_k_zero(self, gf2):
        sing = SingularSpace(gf2, 2, 1)
        family = construct_extremal_thm31(sing, 2, 0)
        assert span_family(family) == full_space(gf2, 3)
        assert len(family) == 4
        assert covering_number(family).tau == 2

    def test_infeasible(self, gf2):
        with pytest.raises(InfeasibleTypeError):
            extremal_span_thm31(SingularSpace(gf2, 2, 0), 2, 1)

    def test_m_one(self, sing_22):
        with pytest.raises(ParameterRangeError):
            construct_extremal_thm31(sing_22, 1, 1)


class TestExtremalSize:
    def test_plain(self, fano_lines):
        assert extremal_size(fano_lines) == 7

    def test_typed(self, typed_family, sing_22):
        assert extremal_size(typed_family, sing_22) == 6

    def test_mixed_types(self, sing_22, gf2):
        family = Family([
            coordinate_subspace(gf2, 4, [0, 1]),
            coordinate_subspace(gf2, 4, [0, 2])
        ])
        assert extremal_size(family, sing_22) is None


class TestVerifyExtremal:
    def test_fano(self, fano_lines):
        report = verify_extremal(fano_lines)
        assert report.passed
        assert [item.name for item in report.items] == [
            "intersecting", "tau", "size", "span"
        ]

    def test_typed(self, typed_family, sing_22):
        assert verify_extremal(typed_family, sing_22).passed

    def test_star_fails_tau_and_size(self, gf2, make_point):
        star = construct_trivial(gf2, 3, 2, make_point(gf2, 3, 0))
        report = verify_extremal(star)
        assert not report.passed
        assert report["intersecting"].passed
        assert not report["tau"].passed
        assert not report["size"].passed
        assert report["span"].passed

    def test_missing_member(self, fano_lines):
        family = Family(fano_lines.members[1:])
        report = verify_extremal(family)
        assert not report["size"].passed
        assert report["tau"].passed

    def test_forwards_jobs(self, fano_lines, mocker):
        cover = mocker.patch(
            "qcover.singular.extremal.covering_number",
            return_value=CoverResult(2, fano_lines.members[0], 0, True, 2,
                                     True))
        assert verify_extremal(fano_lines, jobs=3).passed
        cover.assert_called_once_with(fano_lines, jobs=3, node_budget=None)

    def test_budget_exhausted_fails_tau(self, fano_lines):
        report = verify_extremal(fano_lines, node_budget=1)
        assert not report["tau"].passed
        assert "budget exhausted" in report["tau"].detail

    def test_str(self, fano_lines):
        assert "tau: PASS" in str(verify_extremal(fano_lines))

    def test_unknown_item(self, fano_lines):
        with pytest.raises(KeyError):
            verify_extremal(fano_lines)["missing"]

    def test_empty(self, gf2):
        with pytest.raises(EmptyFamilyError):
            verify_extremal(Family([], gf2, 3, 2))


class TestStructureCheck:
    def test_fano(self, fano_lines):
        assert structure_check(fano_lines)

    def test_missing_member(self, fano_lines):
        assert not structure_check(Family(fano_lines.members[1:]))

    def test_star(self, gf2, make_point):
        star = construct_trivial(gf2, 3, 2, make_point(gf2, 3, 0))
        assert not structure_check(star)

    def test_typed(self, typed_family, sing_22):
        assert structure_check(typed_family, sing_22)

    def test_typed_missing_member(self, typed_family, sing_22):
        family = Family(typed_family.members[1:])
        assert not structure_check(family, sing_22)


class TestShortCover:
    def test_cover(self, typed_family, sing_22, gf2):
        space = span_family(typed_family)
        cover = short_cover_for_type(sing_22, space, 1)
        assert cover == coordinate_subspace(gf2, 4, [2, 3])
        assert all(intersects(cover, member) for member in typed_family)

    def test_k_range(self, sing_22, gf2):
        space = coordinate_subspace(gf2, 4, [0, 2, 3])
        with pytest.raises(DimensionRangeError):
            short_cover_for_type(sing_22, space, 0)
        with pytest.raises(DimensionRangeError):
            short_cover_for_type(sing_22, space, 3)

    def test_span_with_small_w1_part(self, gf2):
        # t = 1 < m+k-1 = 2: a point of W1 covers every member
        sing = SingularSpace(gf2, 2, 1)
        space = full_space(gf2, 3)
        family = Family(enumerate_type(sing, space, 2, 1), gf2, 3, 2)
        cover = short_cover_for_type(sing, space, 1)
        assert cover == sing.w1
        assert all(intersects(cover, member) for member in family)
        assert covering_number(family).tau == 1
