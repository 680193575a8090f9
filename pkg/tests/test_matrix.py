import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import permutations_of, random_matrix, seeded, square_matrices
from src.algorithms.oracle import cofactor_determinant
from src.errors import DimensionMismatchError, IndexOutOfRangeError, MatrixFormatError
from src.models.matrix import (
    IntMatrix, Permutation, connected_components, determinant, direct_sum,
    is_connected, is_skew_symmetric_by_signs, is_symmetric_by_signs,
    leading_principal_submatrix, parse_matrix, permute, principal_submatrix
)


def M(rows):
    return IntMatrix.from_rows(rows)


class TestPredicates:
    def test_symmetric_by_signs(self):
        assert is_symmetric_by_signs(M([[2, 1], [1, 2]]))
        assert not is_symmetric_by_signs(M([[0, 1], [-1, 0]]))
        assert not is_symmetric_by_signs(M([[0, 1], [0, 0]]))

    def test_diagonal_is_unconstrained(self):
        assert is_symmetric_by_signs(M([[-5, 2], [3, 0]]))

    def test_skew_symmetric_by_signs(self):
        assert is_skew_symmetric_by_signs(M([[0, 1], [-1, 0]]))
        assert not is_skew_symmetric_by_signs(M([[0, 1], [1, 0]]))
        assert not is_skew_symmetric_by_signs(M([[1, 1], [-1, 0]]))

    @given(square_matrices(max_n=5))
    def test_skew_by_signs_gives_sign_symmetric_absolute_value(self, matrix):
        if is_skew_symmetric_by_signs(matrix):
            assert is_symmetric_by_signs(M([[abs(value) for value in row] for row in matrix.rows]))


class TestSubmatrices:
    def test_principal_submatrix(self, example_c_plus):
        assert principal_submatrix(example_c_plus, {0, 1, 2}) == M([[2, 1, 1], [1, 2, 0], [1, 0, 2]])
        assert principal_submatrix(example_c_plus, range(4)) == example_c_plus
        assert principal_submatrix(M([[2, 3], [1, 2]]), {1}) == M([[2]])

    def test_principal_submatrix_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            principal_submatrix(M([[1]]), {1})

    def test_leading_principal_submatrix(self, example_c_plus, example_c):
        assert leading_principal_submatrix(example_c_plus, 2) == M([[2, 1], [1, 2]])
        assert leading_principal_submatrix(example_c_plus, 4) == example_c_plus
        assert leading_principal_submatrix(example_c, 1) == M([[2]])

    @pytest.mark.parametrize('k', [0, 5])
    def test_leading_size_out_of_range(self, example_c, k):
        with pytest.raises(IndexOutOfRangeError):
            leading_principal_submatrix(example_c, k)

    def test_direct_sum(self):
        assert direct_sum(M([[2]]), M([[3]])) == M([[2, 0], [0, 3]])
        assert direct_sum(M([[1, 2], [3, 4]]), IntMatrix.zeros(0)) == M([[1, 2], [3, 4]])
        assert direct_sum(M([[0, 1], [1, 0]]), M([[0, 2], [2, 0]])) == M([
            [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 2], [0, 0, 2, 0]
        ])


class TestPermute:
    def test_identity(self, example_c):
        assert permute(example_c, Permutation.identity(4)) == example_c
        assert not hasattr(Permutation.identity(4), 'to_dict')

    def test_swap(self):
        assert permute(M([[0, 1], [2, 0]]), Permutation.swap(2, 0, 1)) == M([[0, 2], [1, 0]])

    def test_size_mismatch(self, example_c):
        with pytest.raises(DimensionMismatchError):
            permute(example_c, Permutation.identity(3))

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    @given(st.data())
    def test_inverse_round_trip(self, data):
        matrix = data.draw(square_matrices(min_n=1, max_n=5))
        permutation = data.draw(permutations_of(matrix.n))
        assert permute(permute(matrix, permutation), permutation.inverse()) == matrix


class TestConnectedComponents:
    def test_two_blocks(self):
        matrix = direct_sum(M([[0, 1], [1, 0]]), M([[0, 2], [2, 0]]))
        assert connected_components(matrix).blocks == ((0, 1), (2, 3))
        assert connected_components(matrix).to_dict() == [[1, 2], [3, 4]]

    def test_example_c_plus_is_connected(self, example_c_plus):
        assert connected_components(example_c_plus).blocks == ((0, 1, 2, 3),)
        assert is_connected(example_c_plus)

    def test_zero_matrix(self):
        assert connected_components(IntMatrix.zeros(3)).blocks == ((0,), (1,), (2,))

    def test_one_sided_edge_connects(self):
        assert is_connected(M([[0, 1], [0, 0]]))

    def test_small_matrices_are_connected(self):
        assert is_connected(M([[5]]))
        assert is_connected(IntMatrix.zeros(0))

    @given(st.data())
    def test_invariant_under_permutation(self, data):
        matrix = data.draw(square_matrices(min_n=1, max_n=6, min_value=-1, max_value=1))
        permutation = data.draw(permutations_of(matrix.n))
        relabeled = {
            tuple(sorted(permutation(i) for i in block))
            for block in connected_components(matrix).blocks
        }
        assert relabeled == set(connected_components(permute(matrix, permutation)).blocks)


class TestDeterminant:
    def test_worked_example(self, example_c, example_c_plus):
        assert determinant(example_c) == 4
        assert determinant(example_c_plus) == 0

    @pytest.mark.parametrize('c', range(-3, 4))
    @pytest.mark.parametrize('d', range(-3, 4))
    def test_two_by_two_quasi_cartan(self, c, d):
        assert determinant(M([[2, c], [d, 2]])) == 4 - c * d

    def test_conventions(self):
        assert determinant(IntMatrix.zeros(0)) == 1
        assert determinant(M([[-7]])) == -7

    def test_needs_row_swap(self):
        assert determinant(M([[0, 1], [1, 0]])) == -1
        assert determinant(M([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1

    def test_large_entries_stay_exact(self):
        big = 10 ** 40
        assert determinant(M([[big, 1], [1, big]])) == big * big - 1

    def test_agrees_with_cofactor_expansion(self):
        rng = seeded(20240601)
        for _ in range(10_000):
            matrix = random_matrix(rng, rng.randint(1, 5))
            assert determinant(matrix) == cofactor_determinant(matrix)

    @given(square_matrices(max_n=5), square_matrices(max_n=5))
    def test_direct_sum_multiplies(self, first, second):
        assert determinant(direct_sum(first, second)) == determinant(first) * determinant(second)

    @given(st.data())
    def test_permutation_invariant(self, data):
        matrix = data.draw(square_matrices(min_n=1, max_n=5))
        permutation = data.draw(permutations_of(matrix.n))
        assert determinant(permute(matrix, permutation)) == determinant(matrix)


class TestParsing:
    def test_text_format(self):
        assert parse_matrix('2\n0 1\n-1 0\n') == M([[0, 1], [-1, 0]])
        assert parse_matrix('2\n0 1\n-1 0') == M([[0, 1], [-1, 0]])

    def test_json_format(self):
        assert parse_matrix('{"n": 2, "rows": [[0, 2], [-2, 0]]}') == M([[0, 2], [-2, 0]])

    def test_empty_matrix(self):
        assert parse_matrix('0\n') == IntMatrix.zeros(0)

    def test_round_trip_through_text(self, example_c):
        assert parse_matrix(example_c.to_text()) == example_c

    def test_non_integer_token_is_located(self):
        with pytest.raises(MatrixFormatError) as excinfo:
            parse_matrix('2\n1 x\n0 1\n')
        assert (excinfo.value.line, excinfo.value.column) == (2, 3)

    def test_non_square_row(self):
        with pytest.raises(MatrixFormatError) as excinfo:
            parse_matrix('2\n1 2 3\n0 1\n')
        assert (excinfo.value.line, excinfo.value.column) == (2, 5)

    def test_missing_row(self):
        with pytest.raises(MatrixFormatError) as excinfo:
            parse_matrix('3\n1 0 0\n0 1 0\n')
        assert excinfo.value.line == 4

    def test_float_rejected(self):
        with pytest.raises(MatrixFormatError):
            parse_matrix('1\n1.5\n')
        with pytest.raises(MatrixFormatError):
            parse_matrix('{"n": 1, "rows": [[1.5]]}')

    def test_json_not_square(self):
        with pytest.raises(MatrixFormatError):
            parse_matrix('{"n": 2, "rows": [[1, 2], [3]]}')

    def test_bad_json_is_located(self):
        with pytest.raises(MatrixFormatError) as excinfo:
            parse_matrix('{"n": 1,\n "rows": [[1]}')
        assert excinfo.value.line == 2

    def test_json_errors_are_located(self):
        cases = [
            ('{"n": 2,\n "rows": [[1, 2],\n [3]]}', (3, 2)),
            ('{"n": 1, "rows": [[1.5]]}', (1, 20)),
            ('{"n": 1}', (1, 1)),
            ('{"n": "x", "rows": []}', (1, 7)),
        ]
        for text, location in cases:
            with pytest.raises(MatrixFormatError) as excinfo:
                parse_matrix(text)
            assert (excinfo.value.line, excinfo.value.column) == location, text

    def test_entries_beyond_default_digit_limit(self):
        matrix = parse_matrix('1\n' + '9' * 5000 + '\n')
        assert matrix[0, 0] == 10 ** 5000 - 1
        assert matrix.to_text() == '1\n' + '9' * 5000 + '\n'
        assert parse_matrix('{"n": 1, "rows": [[' + '9' * 5000 + ']]}') == matrix
