import random
from itertools import product

from hypothesis import strategies as st

from src.algorithms.companion import companion_bound_violations, verify_companion
from src.models.matrix import IntMatrix, Permutation

# The worked 4x4 example; B in skew orientation, same |b_ij| as printed
EXAMPLE_B = IntMatrix.from_rows([
    [0, 1, 1, 0],
    [-1, 0, 0, 1],
    [-1, 0, 0, 1],
    [0, -1, -1, 0],
])
EXAMPLE_C = IntMatrix.from_rows([
    [2, -1, 1, 0],
    [-1, 2, 0, 1],
    [1, 0, 2, 1],
    [0, 1, 1, 2],
])
EXAMPLE_C_PLUS = IntMatrix.from_rows([
    [2, 1, 1, 0],
    [1, 2, 0, 1],
    [1, 0, 2, 1],
    [0, 1, 1, 2],
])


def all_ones_skew(n):
    return IntMatrix.from_rows([[0 if i == j else (1 if i < j else -1) for j in range(n)] for i in range(n)])


def square_matrices(min_n=0, max_n=5, min_value=-3, max_value=3):
    def rows(n):
        row = st.lists(st.integers(min_value, max_value), min_size=n, max_size=n)
        return st.lists(row, min_size=n, max_size=n).map(IntMatrix.from_rows)
    return st.integers(min_n, max_n).flatmap(rows)


def permutations_of(n):
    return st.permutations(list(range(n))).map(lambda mapping: Permutation(tuple(mapping)))


def random_matrix(rng, n, low=-3, high=3):
    return IntMatrix.from_rows([[rng.randint(low, high) for _ in range(n)] for _ in range(n)])


def random_sign_symmetric(rng, n, high=3, density=0.6):
    """Pairs both zero or of equal sign; magnitudes independent"""
    rows = [[rng.randint(-high, high) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                sign = rng.choice((-1, 1))
                rows[i][j] = sign * rng.randint(1, high)
                rows[j][i] = sign * rng.randint(1, high)
            else:
                rows[i][j] = rows[j][i] = 0
    return IntMatrix.from_rows(rows)


def random_symmetrizable(rng, n, density=0.7):
    """E x S for a positive integer diagonal E and symmetric S"""
    scale = [rng.randint(1, 3) for _ in range(n)]
    symmetric = [[0] * n for _ in range(n)]
    for i in range(n):
        symmetric[i][i] = rng.randint(-1, 6)
        for j in range(i + 1, n):
            if rng.random() < density:
                symmetric[i][j] = symmetric[j][i] = rng.randint(-2, 2)
    return IntMatrix.from_rows([[scale[i] * symmetric[i][j] for j in range(n)] for i in range(n)])


def random_skew_symmetrizable(rng, n, dense=False, density=0.6):
    """Entries with |b_ij| in {1, 2}, skew-symmetrized by a random d in {1, 2}^n"""
    d = [rng.choice((1, 2)) for _ in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if not dense and rng.random() >= density:
                continue
            sign = rng.choice((-1, 1))
            if d[i] == d[j]:
                magnitude = rng.choice((1, 2))
                rows[i][j], rows[j][i] = sign * magnitude, -sign * magnitude
            elif d[i] < d[j]:
                rows[i][j], rows[j][i] = sign * 2, -sign
            else:
                rows[i][j], rows[j][i] = sign, -sign * 2
    return IntMatrix.from_rows(rows)


def _pair_options(max_abs, orientation):
    options = [(0, 0)]
    for first, second in product(range(1, max_abs + 1), repeat=2):
        for sign in (-1, 1):
            options.append((sign * first, orientation * sign * second))
    return options


def all_3x3_patterns(diagonal, orientation, max_abs=2):
    """Every 3x3 matrix with the given diagonal whose pairs are zero or sign-related"""
    pairs = [(0, 1), (0, 2), (1, 2)]
    options = _pair_options(max_abs, orientation)
    for choice in product(options, repeat=3):
        rows = [[diagonal if i == j else 0 for j in range(3)] for i in range(3)]
        for (i, j), (upper, lower) in zip(pairs, choice):
            rows[i][j], rows[j][i] = upper, lower
        yield IntMatrix.from_rows(rows)


def seeded(seed):
    return random.Random(seed)


def assert_valid_companion(matrix, result):
    """Every returned companion verifies and respects the pair and triangle bounds"""
    if not result.found:
        return
    assert verify_companion(matrix, result.companion)
    assert companion_bound_violations(result.companion) == []
