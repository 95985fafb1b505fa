import pytest

import qcover.rng as rng
from qcover.error.matrix_error import MalformedMatrixError
from qcover.gfq.field import make_field
from qcover.gfq.matrix import Matrix, mat_kernel, mat_rank, mat_rref


def _random_matrix(spec, num_rows, num_cols, state):
    return Matrix(state.randint(0, spec.q, size=(num_rows, num_cols)),
                  num_cols)


def _apply(spec, row, vector):
    total = 0
    for (x, y) in zip(row, vector):
        total = spec.add(total, spec.mul(x, y))
    return total


class TestMatrix:
    def test_ragged_rows(self):
        with pytest.raises(MalformedMatrixError):
            Matrix([(1, 0), (1, )])

    def test_empty_without_cols(self):
        with pytest.raises(MalformedMatrixError):
            Matrix([])

    def test_empty_with_cols(self):
        assert Matrix([], 3).num_cols == 3

    def test_from_entries(self):
        assert Matrix.from_entries(2, 2, [1, 2, 3, 4]).rows == ((1, 2),
                                                                 (3, 4))

    def test_from_entries_bad_count(self):
        with pytest.raises(MalformedMatrixError):
            Matrix.from_entries(2, 2, [1, 2, 3])

    def test_transpose(self):
        assert Matrix([(1, 2, 3)]).transpose() == Matrix([(1, ), (2, ),
                                                          (3, )])

    def test_identity(self):
        assert Matrix.identity(2).rows == ((1, 0), (0, 1))


class TestRref:
    def test_gf2_example(self, gf2):
        result = mat_rref(gf2, Matrix([(1, 1, 0, 0), (0, 1, 1, 0)]))
        assert result.matrix.rows == ((1, 0, 1, 0), (0, 1, 1, 0))
        assert result.rank == 2
        assert result.pivots == (0, 1)

    def test_scales_pivot(self, gf3):
        assert mat_rref(gf3, Matrix([(2, 1, 0)])).matrix.rows == ((1, 2, 0), )

    def test_dependent_rows_dropped(self, gf3):
        result = mat_rref(gf3, Matrix([(1, 2, 0), (2, 1, 0)]))
        assert result.rank == 1

    def test_zero_matrix(self, gf5):
        result = mat_rref(gf5, Matrix.zeros(2, 3))
        assert result.rank == 0
        assert result.matrix.num_rows == 0

    @pytest.mark.parametrize("q", (2, 3, 4, 5))
    def test_idempotent(self, q):
        spec = make_field(q)
        state = rng.make_random_state(q)
        for _ in range(25):
            reduced = mat_rref(spec, _random_matrix(spec, 4, 5, state)).matrix
            assert mat_rref(spec, reduced).matrix == reduced

    @pytest.mark.parametrize("q", (2, 3, 4, 5))
    def test_invariant_under_row_operations(self, q):
        spec = make_field(q)
        state = rng.make_random_state(100 + q)
        for _ in range(25):
            matrix = _random_matrix(spec, 3, 5, state)
            rows = [list(row) for row in matrix.rows]
            # swap, scale by a unit and add a multiple of another row
            rows[0], rows[2] = rows[2], rows[0]
            rows[1] = list(spec.scale_vec(q - 1, rows[1]))
            rows[2] = list(spec.axpy(1, rows[0], rows[2]))
            assert mat_rref(spec, Matrix(rows, 5)).matrix == \
                mat_rref(spec, matrix).matrix


class TestKernel:
    def test_gf2_example(self, gf2):
        kernel = mat_kernel(gf2, Matrix([(1, 1, 0, 0), (0, 1, 1, 0)]))
        assert kernel.rows == ((1, 1, 1, 0), (0, 0, 0, 1))

    def test_full_rank_square(self, gf3):
        assert mat_kernel(gf3, Matrix.identity(3)).num_rows == 0

    @pytest.mark.parametrize("q", (2, 3, 4, 5))
    def test_rank_nullity(self, q):
        spec = make_field(q)
        state = rng.make_random_state(200 + q)
        for _ in range(25):
            matrix = _random_matrix(spec, 3, 5, state)
            kernel = mat_kernel(spec, matrix)
            assert mat_rank(spec, matrix) + kernel.num_rows == 5
            for vector in kernel.rows:
                assert all(
                    _apply(spec, row, vector) == 0 for row in matrix.rows)
