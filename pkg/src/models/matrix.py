"""Exact integer matrices and the structural operations the classifiers build on.

Indices are 0-based inside the library. Everything that leaves the process
(text and JSON formats, component lists in reports, error messages) is
1-based.
"""
import json
import re
import sys
from dataclasses import dataclass

import networkx as nx

from src.errors import (
    DimensionMismatchError, IndexOutOfRangeError, MatrixFormatError
)

_INTEGER_TOKEN = re.compile(r'[+-]?\d+\Z')
_JSON_WHITESPACE = re.compile(r'[ \t\n\r]*')

# entries and minors are arbitrary precision; lift the int <-> str digit limit
if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of Python ints, stored as a tuple of row tuples"""
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatchError(
                    f'row {i + 1} has {len(row)} entries, expected {n}'
                )
            for value in row:
                # bool is an int subclass but never a matrix entry
                if not isinstance(value, int) or isinstance(value, bool):
                    raise TypeError(f'matrix entries must be integers, got {value!r}')
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def from_rows(cls, rows):
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def zeros(cls, n):
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def identity(cls, n, scale=1):
        return cls(tuple(tuple(scale if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, index):
        i, j = index
        return self.rows[i][j]

    def __len__(self):
        return self.n

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(self.n))

    def off_diagonal_pairs(self):
        """Unordered pairs (i, j), i < j, in row-major order"""
        n = self.n
        return [(i, j) for i in range(n) for j in range(i + 1, n)]

    def to_dict(self):
        return {
            'n': self.n,
            'rows': [list(row) for row in self.rows]
        }

    def to_text(self):
        lines = [str(self.n)]
        lines.extend(' '.join(str(value) for value in row) for row in self.rows)
        return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0..n-1}; applied as a simultaneous row/column permutation"""
    mapping: tuple

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise ValueError(f'not a permutation: {mapping!r}')
        object.__setattr__(self, 'mapping', mapping)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def swap(cls, n, i, j):
        mapping = list(range(n))
        mapping[i], mapping[j] = mapping[j], mapping[i]
        return cls(tuple(mapping))

    @property
    def n(self):
        return len(self.mapping)

    def __call__(self, i):
        return self.mapping[i]

    def inverse(self):
        inverse = [0] * self.n
        for i, image in enumerate(self.mapping):
            inverse[image] = i
        return Permutation(tuple(inverse))


@dataclass(frozen=True)
class ComponentPartition:
    """Connected blocks of the nonzero pattern, each sorted, ordered by least index"""
    blocks: tuple

    @property
    def is_connected(self):
        return len(self.blocks) <= 1

    def block_of(self, i):
        for block in self.blocks:
            if i in block:
                return block
        raise IndexOutOfRangeError(f'index {i + 1} is not covered by the partition')

    def to_dict(self):
        return [[i + 1 for i in block] for block in self.blocks]


# Structural predicates

def is_symmetric_by_signs(matrix):
    """Off-diagonal pairs are both zero or have a strictly positive product"""
    for i, j in matrix.off_diagonal_pairs():
        a_ij, a_ji = matrix[i, j], matrix[j, i]
        if a_ij == 0 and a_ji == 0:
            continue
        if a_ij * a_ji <= 0:
            return False
    return True


def is_skew_symmetric_by_signs(matrix):
    """Zero diagonal; off-diagonal pairs both zero or with a strictly negative product"""
    if any(value != 0 for value in matrix.diagonal()):
        return False
    for i, j in matrix.off_diagonal_pairs():
        b_ij, b_ji = matrix[i, j], matrix[j, i]
        if b_ij == 0 and b_ji == 0:
            continue
        if b_ij * b_ji >= 0:
            return False
    return True


# Submatrices, sums and permutations

def principal_submatrix(matrix, keep):
    """Rows and columns in keep, original order preserved"""
    indices = sorted(set(keep))
    for i in indices:
        if not 0 <= i < matrix.n:
            raise IndexOutOfRangeError(f'index {i + 1} out of range for a {matrix.n}x{matrix.n} matrix')
    return IntMatrix(tuple(tuple(matrix[i, j] for j in indices) for i in indices))


def leading_principal_submatrix(matrix, k):
    if not 1 <= k <= matrix.n:
        raise IndexOutOfRangeError(f'leading size {k} out of range 1..{matrix.n}')
    return IntMatrix(tuple(row[:k] for row in matrix.rows[:k]))


def direct_sum(first, second):
    m, p = first.n, second.n
    rows = [tuple(row) + (0,) * p for row in first.rows]
    rows.extend((0,) * m + tuple(row) for row in second.rows)
    return IntMatrix(tuple(rows))


def permute(matrix, permutation):
    """result[P(i)][P(j)] = A[i][j]"""
    n = matrix.n
    if permutation.n != n:
        raise DimensionMismatchError(f'permutation on {permutation.n} points applied to a {n}x{n} matrix')
    result = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            result[permutation(i)][permutation(j)] = matrix[i, j]
    return IntMatrix.from_rows(result)


def pattern_graph(matrix):
    """Undirected graph with an edge i~j iff a_ij or a_ji is nonzero"""
    graph = nx.Graph()
    graph.add_nodes_from(range(matrix.n))
    graph.add_edges_from(
        (i, j) for i, j in matrix.off_diagonal_pairs()
        if matrix[i, j] != 0 or matrix[j, i] != 0
    )
    return graph


def connected_components(matrix):
    blocks = [tuple(sorted(component)) for component in nx.connected_components(pattern_graph(matrix))]
    blocks.sort(key=lambda block: block[0])
    return ComponentPartition(tuple(blocks))


def is_connected(matrix):
    return connected_components(matrix).is_connected


# Determinants

def determinant(matrix):
    """Exact determinant by Bareiss fraction-free elimination, O(n^3)"""
    n = matrix.n
    if n == 0:
        return 1
    m = [list(row) for row in matrix.rows]
    sign = 1
    previous_pivot = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i, row_k = m[i], m[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                # exact: every intermediate is a minor of the input
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // previous_pivot
        previous_pivot = pivot
    return sign * m[n - 1][n - 1]


# Text and JSON formats

def parse_matrix(text):
    """Parse either the canonical text format or the JSON object format"""
    if text.lstrip().startswith('{'):
        return parse_matrix_json(text)
    return parse_matrix_text(text)


def _tokens(line):
    return [(match.group(0), match.start() + 1) for match in re.finditer(r'\S+', line)]


def _integer(token, line, column):
    if not _INTEGER_TOKEN.match(token):
        raise MatrixFormatError(f'expected an integer, got {token!r}', line, column)
    return int(token)


def parse_matrix_text(text):
    """First line n, then n lines of n whitespace-separated integers"""
    lines = text.split('\n')
    lines = [line[:-1] if line.endswith('\r') else line for line in lines]
    while lines and lines[-1].strip() == '':
        lines.pop()
    if not lines:
        raise MatrixFormatError('empty input', 1, 1)

    header = _tokens(lines[0])
    if len(header) != 1:
        column = header[1][1] if len(header) > 1 else 1
        raise MatrixFormatError('first line must hold the dimension n alone', 1, column)
    n = _integer(header[0][0], 1, header[0][1])
    if n < 0:
        raise MatrixFormatError(f'dimension must be non-negative, got {n}', 1, header[0][1])

    body = lines[1:]
    if len(body) != n:
        # missing rows are reported where the next row should start
        line_number = len(lines) + 1 if len(body) < n else n + 2
        raise MatrixFormatError(f'expected {n} matrix rows, found {len(body)}', line_number, 1)

    rows = []
    for offset, line in enumerate(body):
        line_number = offset + 2
        tokens = _tokens(line)
        if len(tokens) != n:
            column = tokens[n][1] if len(tokens) > n else len(line) + 1
            raise MatrixFormatError(f'expected {n} entries, found {len(tokens)} (matrix is not square)', line_number, column)
        rows.append(tuple(_integer(token, line_number, column) for token, column in tokens))
    return IntMatrix(tuple(rows))


def parse_matrix_json(text):
    """{"n": int, "rows": [[int, ...], ...]}"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(e.msg, e.lineno, e.colno)
    if not isinstance(data, dict) or 'rows' not in data:
        raise MatrixFormatError('JSON matrix must be an object with "n" and "rows"', *_json_location(text))
    rows = data['rows']
    n = data.get('n', len(rows) if isinstance(rows, list) else None)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise MatrixFormatError(
            f'"n" must be a non-negative integer, got {n!r}',
            *_json_location(text, 'n' if 'n' in data else 'rows')
        )
    if not isinstance(rows, list) or len(rows) != n:
        raise MatrixFormatError(f'"rows" must be a list of {n} rows', *_json_location(text, 'rows'))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFormatError(
                f'row {i + 1} must be a list of {n} integers (matrix is not square)',
                *_json_location(text, 'rows', i)
            )
        for j, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool):
                raise MatrixFormatError(
                    f'entry ({i + 1}, {j + 1}) is not an integer: {value!r}',
                    *_json_location(text, 'rows', i, j)
                )
    return IntMatrix.from_rows(rows)


def _json_members(text, start):
    """Offsets of the members of the object or array opening at text[start], by key or index"""
    decoder = json.JSONDecoder()
    closing = '}' if text[start] == '{' else ']'
    members = {}
    pos = _JSON_WHITESPACE.match(text, start + 1).end()
    index = 0
    while text[pos] != closing:
        if closing == '}':
            key, pos = decoder.raw_decode(text, pos)
            # past the ':'
            pos = _JSON_WHITESPACE.match(text, _JSON_WHITESPACE.match(text, pos).end() + 1).end()
        else:
            key, index = index, index + 1
        # repeated keys: the last one wins, as in json.loads
        members[key] = pos
        _, end = decoder.raw_decode(text, pos)
        pos = _JSON_WHITESPACE.match(text, end).end()
        if text[pos] == ',':
            pos = _JSON_WHITESPACE.match(text, pos + 1).end()
    return members


def _json_location(text, *path):
    """1-based (line, column) of the value at path in a document json.loads accepted.

    Stops at the deepest value that exists along the path.
    """
    offset = _JSON_WHITESPACE.match(text).end()
    for step in path:
        if text[offset] not in '{[':
            break
        members = _json_members(text, offset)
        if step not in members:
            break
        offset = members[step]
    line = text.count('\n', 0, offset) + 1
    column = offset - (text.rfind('\n', 0, offset) + 1) + 1
    return line, column
