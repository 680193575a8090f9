import pytest

from helpers import all_ones_skew, random_matrix, random_skew_symmetrizable, seeded
from src.algorithms.oracle import (
    MAX_COFACTOR_ORACLE_SIZE, MAX_COMPANION_ORACLE_SIZE, MAX_CYCLE_ORACLE_SIZE,
    cofactor_determinant, cycle_skew_symmetrizable, cycle_symmetrizable, exhaustive_companion,
    principal_minors_positive, principal_minors_verdict, skew_as_symmetric
)
from src.algorithms.symmetrize import check_skew_symmetrizable
from src.errors import OracleLimitError
from src.models.companion import FAST_PATH_CPLUS_FIRST
from src.models.matrix import IntMatrix


def M(rows):
    return IntMatrix.from_rows(rows)


class TestCycleSymmetrizable:
    def test_examples(self, example_c):
        assert cycle_symmetrizable(M([[0, 2], [1, 0]]))
        assert cycle_symmetrizable(example_c)
        assert not cycle_symmetrizable(M([[0, 1], [-1, 0]]))
        assert not cycle_symmetrizable(M([[0, 1, 2], [2, 0, 1], [1, 2, 0]]))

    def test_balanced_triangle(self):
        assert cycle_symmetrizable(M([[0, 2, 1], [1, 0, 1], [1, 2, 0]]))

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            cycle_symmetrizable(IntMatrix.zeros(MAX_CYCLE_ORACLE_SIZE + 1))


class TestCycleSkewSymmetrizable:
    def test_examples(self, example_b):
        assert cycle_skew_symmetrizable(example_b)
        assert cycle_skew_symmetrizable(M([[0, 2], [-1, 0]]))
        assert not cycle_skew_symmetrizable(M([[0, 1], [1, 0]]))
        assert not cycle_skew_symmetrizable(M([[1, 1], [-1, 0]]))

    def test_skew_as_symmetric(self):
        assert skew_as_symmetric(M([[5, 2], [-1, 3]])) == M([[0, 2], [1, 0]])

    def test_agrees_with_worklist(self):
        rng = seeded(13)
        for trial in range(400):
            n = rng.randint(1, 5)
            if trial % 2:
                matrix = random_skew_symmetrizable(rng, n)
            else:
                matrix = random_matrix(rng, n, low=-2, high=2)
            assert cycle_skew_symmetrizable(matrix) == check_skew_symmetrizable(matrix).verdict, matrix


class TestCofactorDeterminant:
    def test_examples(self, example_c, example_c_plus):
        assert cofactor_determinant(example_c) == 4
        assert cofactor_determinant(example_c_plus) == 0
        assert cofactor_determinant(IntMatrix.zeros(0)) == 1
        assert cofactor_determinant(IntMatrix.identity(5, scale=2)) == 32

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            cofactor_determinant(IntMatrix.identity(MAX_COFACTOR_ORACLE_SIZE + 1))

    def test_principal_minors(self, example_c, example_c_plus):
        assert principal_minors_positive(example_c)
        assert not principal_minors_positive(example_c_plus)

    def test_verdict_reports_leading_minors(self, example_c, example_c_plus):
        verdict = principal_minors_verdict(example_c)
        assert verdict.to_dict() == {'positive': True, 'first_failure': None, 'minors': ['2', '3', '4', '4']}

        verdict = principal_minors_verdict(example_c_plus)
        assert verdict.to_dict() == {'positive': False, 'first_failure': 4, 'minors': ['2', '3', '4', '0']}

    def test_verdict_stops_at_first_failure(self):
        verdict = principal_minors_verdict(M([[0, 1, 0], [1, 2, 0], [0, 0, 2]]))
        assert not verdict.positive
        assert verdict.first_failure == 1
        assert verdict.to_dict()['minors'] == ['0']


class TestExhaustiveCompanion:
    def test_example_b(self, example_b, example_c_plus):
        result = exhaustive_companion(example_b)
        assert result.found
        assert result.companion != example_c_plus
        assert principal_minors_positive(result.companion)

    def test_c_plus_first(self):
        result = exhaustive_companion(all_ones_skew(4))
        assert result.fast_path == FAST_PATH_CPLUS_FIRST
        assert result.assignments_tried == 1

    def test_none(self):
        result = exhaustive_companion(M([[0, 2], [-2, 0]]))
        assert not result.found
        # C+ and then both signs on the single pair
        assert result.assignments_tried == 3

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            exhaustive_companion(all_ones_skew(MAX_COMPANION_ORACLE_SIZE + 1))
