import itertools
import pickle

import pytest

from qcover.error.field_error import (ElementRangeError, NotPrimePowerError,
                                      UnknownOperationError,
                                      ZeroInverseError)
from qcover.gfq.field import (factor_prime_power, field_arith, make_field,
                              prime_powers)

_SMALL_QS = (2, 3, 4, 5, 7, 8, 9)


class TestFactorPrimePower:
    def test_prime(self):
        assert factor_prime_power(7) == (7, 1)

    def test_prime_power(self):
        assert factor_prime_power(8) == (2, 3)

    def test_not_prime_power(self):
        assert factor_prime_power(12) is None

    def test_below_two(self):
        assert factor_prime_power(1) is None

    def test_prime_powers_range(self):
        assert prime_powers(2, 10) == [2, 3, 4, 5, 7, 8, 9]

    def test_prime_powers_lower_clamped(self):
        assert prime_powers(0, 3) == [2, 3]


class TestMakeField:
    def test_bad_size_composite(self):
        with pytest.raises(NotPrimePowerError):
            make_field(6)

    def test_bad_size_one(self):
        with pytest.raises(NotPrimePowerError):
            make_field(1)

    def test_bad_size_too_large(self):
        with pytest.raises(NotPrimePowerError):
            make_field(2**17)

    def test_prime_field_shape(self):
        spec = make_field(5)
        assert (spec.q, spec.p, spec.e) == (5, 5, 1)

    def test_gf4_modulus(self):
        assert make_field(4).modulus == (1, 1, 1)

    def test_gf8_modulus(self):
        assert make_field(8).modulus == (1, 0, 1, 1)

    def test_gf9_modulus(self):
        assert make_field(9).modulus == (1, 0, 1)

    def test_cached(self):
        assert make_field(4) is make_field(4)

    def test_pickle_round_trip(self, gf4):
        assert pickle.loads(pickle.dumps(gf4)) == gf4

    def test_str(self, gf4):
        assert str(gf4) == "GF(4)"


class TestFieldArithmetic:
    def test_gf2_add(self, gf2):
        assert gf2.add(1, 1) == 0

    def test_gf4_mul(self, gf4):
        assert gf4.mul(2, 2) == 3

    def test_gf4_add(self, gf4):
        assert gf4.add(2, 3) == 1

    def test_gf5_inv(self, gf5):
        assert gf5.inv(2) == 3

    def test_gf9_neg(self):
        gf9 = make_field(9)
        for a in range(9):
            assert gf9.add(a, gf9.neg(a)) == 0

    def test_inv_zero(self, gf5):
        with pytest.raises(ZeroInverseError):
            gf5.inv(0)

    def test_field_arith_dispatch(self, gf5):
        assert field_arith(gf5, "sub", 1, 3) == 3

    def test_field_arith_bad_code(self, gf5):
        with pytest.raises(ElementRangeError):
            field_arith(gf5, "add", 5, 1)

    def test_field_arith_bad_second_code(self, gf5):
        with pytest.raises(ElementRangeError):
            field_arith(gf5, "mul", 1, -1)

    def test_field_arith_unknown_op(self, gf5):
        with pytest.raises(UnknownOperationError):
            field_arith(gf5, "div", 1, 2)

    def test_field_arith_missing_operand(self, gf5):
        with pytest.raises(UnknownOperationError):
            field_arith(gf5, "add", 1)

    def test_field_arith_unary(self, gf5):
        assert field_arith(gf5, "neg", 2) == 3
        assert field_arith(gf5, "inv", 2) == 3

    @pytest.mark.parametrize("q", _SMALL_QS)
    def test_axioms_exhaustive(self, q):
        spec = make_field(q)
        elements = range(q)
        for (a, b) in itertools.product(elements, repeat=2):
            assert spec.add(a, b) == spec.add(b, a)
            assert spec.mul(a, b) == spec.mul(b, a)
            assert spec.sub(spec.add(a, b), b) == a
        for (a, b, c) in itertools.product(elements, repeat=3):
            assert spec.add(spec.add(a, b), c) == spec.add(a, spec.add(b, c))
            assert spec.mul(spec.mul(a, b), c) == spec.mul(a, spec.mul(b, c))
            assert spec.mul(a, spec.add(b, c)) == \
                spec.add(spec.mul(a, b), spec.mul(a, c))
        for a in elements:
            assert spec.add(a, 0) == a
            assert spec.mul(a, 1) == a
            if a:
                assert spec.mul(a, spec.inv(a)) == 1

    @pytest.mark.parametrize("q", (16, 25, 27))
    def test_inverses_larger_fields(self, q):
        spec = make_field(q)
        assert all(spec.mul(a, spec.inv(a)) == 1 for a in range(1, q))


class TestFieldVectors:
    def test_add_vec(self, gf3):
        assert gf3.add_vec((1, 2, 0), (2, 2, 1)) == (0, 1, 1)

    def test_scale_vec(self, gf5):
        assert gf5.scale_vec(2, (1, 3, 0)) == (2, 1, 0)

    def test_scale_vec_zero(self, gf5):
        assert gf5.scale_vec(0, (1, 3)) == (0, 0)

    def test_axpy(self, gf4):
        assert gf4.axpy(2, (1, 0), (0, 1)) == (2, 1)

    def test_combine(self, gf3):
        assert gf3.combine((1, 2), [(1, 0, 0), (0, 1, 0)], 3) == (1, 2, 0)
