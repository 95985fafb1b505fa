import pytest

from qcover.error.count_error import InfeasibleTypeError, ParameterRangeError
from qcover.qcount.gaussian import (check_type_condition, count_type, eq99_t,
                                    gaussian, point_count,
                                    require_type_condition)


class TestGaussian:
    @pytest.mark.parametrize("args,expected", [((3, 2, 2), 7),
                                               ((5, 3, 2), 155),
                                               ((5, 3, 3), 1210),
                                               ((4, 2, 3), 130),
                                               ((4, 2, 2), 35)])
    def test_pinned_values(self, args, expected):
        assert gaussian(*args) == expected

    def test_m_above_n(self):
        assert gaussian(2, 3, 5) == 0

    def test_m_zero(self):
        assert gaussian(6, 0, 7) == 1

    def test_point_count(self):
        assert point_count(3, 4) == 21

    @pytest.mark.parametrize("q", (2, 3, 4, 5))
    def test_symmetry(self, q):
        for n in range(8):
            for m in range(n + 1):
                assert gaussian(n, m, q) == gaussian(n, n - m, q)

    @pytest.mark.parametrize("q", (2, 3, 4, 5))
    def test_pascal(self, q):
        for n in range(1, 8):
            for m in range(1, n + 1):
                assert gaussian(n, m, q) == \
                    gaussian(n - 1, m - 1, q) + q**m * gaussian(n - 1, m, q)

    def test_exact_at_large_parameters(self):
        value = gaussian(40, 20, 128)
        assert isinstance(value, int)
        assert value > 128**(20 * 20)

    def test_bad_q(self):
        with pytest.raises(ParameterRangeError):
            gaussian(3, 1, 1)

    def test_bad_negative_n(self):
        with pytest.raises(ParameterRangeError):
            gaussian(-1, 0, 2)

    def test_bad_non_integer(self):
        with pytest.raises(ParameterRangeError):
            gaussian(2.5, 1, 2)


class TestTypeCondition:
    def test_feasible(self):
        assert check_type_condition(1, 0, 2, 1, 2, 1) is None

    def test_names_violated_clause(self):
        violation = check_type_condition(0, 0, 2, 2, 2, 1)
        assert violation.startswith("k <= l")

    def test_names_first_violated_clause(self):
        violation = check_type_condition(2, 3, 2, 1, 2, 1)
        assert violation.startswith("k1 <= k")

    def test_require_raises(self):
        with pytest.raises(InfeasibleTypeError) as info:
            require_type_condition(3, 0, 3, 0, 2, 5)
        assert "m-k <= n" in str(info.value)


class TestCountType:
    def test_whole_space(self):
        assert count_type(2, 1, 2, 1, 2, 1, 3) == 1

    def test_points_in_typed_plane(self):
        assert count_type(1, 0, 2, 1, 2, 1, 2) == 2

    def test_points_off_w1(self):
        assert count_type(1, 0, 3, 1, 2, 1, 2) == 6

    def test_infeasible_is_zero(self):
        assert count_type(1, 2, 2, 1, 2, 1, 2) == 0

    def test_larger_instance(self):
        # q^((3-1)(3-1)) * [2 2] * [3 1] at q = 5
        assert count_type(3, 1, 5, 3, 4, 4, 5) == 5**4 * 31

    def test_bad_q(self):
        with pytest.raises(ParameterRangeError):
            count_type(1, 0, 2, 1, 2, 1, 1)


class TestEq99T:
    def test_k_zero_small_n(self):
        assert eq99_t(3, 0, 4) == 1

    def test_k_zero_large_n(self):
        assert eq99_t(3, 0, 9) == 0

    def test_k_positive(self):
        assert eq99_t(3, 2, 4) == 4

    def test_bad_m(self):
        with pytest.raises(ParameterRangeError):
            eq99_t(1, 0, 3)
