# Copyright 2021 The Semistable Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

__all__ = ['IntMatrix', 'Matrix', 'check_field_char', 'rank']

from fractions import Fraction
from numbers import Integral, Rational
from typing import Dict, Iterator, Optional, Sequence, Tuple

import numpy as np
from sympy import GF, QQ, isprime
from sympy.polys.matrices import DomainMatrix

from semistable.typing import Entry, Rows


class Matrix:
    """Immutable matrix with exact rational entries.

    Entries are stored in a read-only numpy array of dtype object holding python ints and Fractions, so
    every operation is exact. Floating point values are rejected.
    """
    __slots__ = ('_value',)

    def __init__(self, rows: Rows = (), shape: Optional[Tuple[int, int]] = None):
        """Creates a matrix.

        Args:
            rows: the entries, row by row. A numpy array or another Matrix is accepted too.
            shape: (rows, cols), required to describe matrices without rows such as a 0x3 matrix.

        Raises:
            ValueError: if the rows do not form a rectangle of the given shape.
            TypeError: if an entry is not an exact rational number.
        """
        source = rows._value if isinstance(rows, Matrix) else rows
        data = [[self._coerce(x) for x in row] for row in source]
        if shape is None:
            shape = (len(data), len(data[0]) if data else 0)
        if len(data) != shape[0] or any(len(row) != shape[1] for row in data):
            raise ValueError(f'Entries do not form a {shape[0]}x{shape[1]} matrix', shape)
        value = np.empty(shape, dtype=object)
        for i, row in enumerate(data):
            value[i, :] = row
        value.flags.writeable = False
        self._value = value

    @staticmethod
    def _coerce(x: Entry) -> Entry:
        if isinstance(x, bool) or not isinstance(x, Rational):
            raise TypeError(f'Matrix entries must be exact rationals, got {type(x).__name__}', x)
        if isinstance(x, Integral):
            return int(x)
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    @classmethod
    def _wrap(cls, value: np.ndarray) -> 'Matrix':
        m = cls.__new__(cls)
        value.flags.writeable = False
        m._value = value
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'Matrix':
        """Returns the rows x cols zero matrix."""
        value = np.empty((rows, cols), dtype=object)
        value.fill(0)
        return cls._wrap(value)

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        """Returns the n x n identity matrix."""
        value = cls.zeros(n, n)._value.copy()
        for i in range(n):
            value[i, i] = 1
        return cls._wrap(value)

    @classmethod
    def from_blocks(cls, row_sizes: Sequence[int], col_sizes: Sequence[int],
                    blocks: Dict[Tuple[int, int], 'Matrix']) -> 'Matrix':
        """Assembles a matrix from blocks, missing blocks being zero.

        Args:
            row_sizes: heights of the block rows.
            col_sizes: widths of the block columns.
            blocks: map (block row, block column) -> Matrix of the matching shape.

        Returns:
            The assembled (sum(row_sizes), sum(col_sizes)) matrix.
        """
        row_offsets = np.concatenate([[0], np.cumsum(row_sizes, dtype=int)])
        col_offsets = np.concatenate([[0], np.cumsum(col_sizes, dtype=int)])
        value = cls.zeros(int(row_offsets[-1]), int(col_offsets[-1]))._value.copy()
        for (bi, bj), block in blocks.items():
            if block.shape != (row_sizes[bi], col_sizes[bj]):
                raise ValueError(f'Block ({bi}, {bj}) has shape {block.shape}, '
                                 f'expected {(row_sizes[bi], col_sizes[bj])}', (bi, bj))
            value[row_offsets[bi]:row_offsets[bi + 1], col_offsets[bj]:col_offsets[bj + 1]] = block._value
        if cls is IntMatrix and not all(isinstance(b, IntMatrix) for b in blocks.values()):
            return Matrix._wrap(value)
        return cls._wrap(value)

    @property
    def rows(self) -> int:
        return self._value.shape[0]

    @property
    def cols(self) -> int:
        return self._value.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._value.shape

    @property
    def value(self) -> np.ndarray:
        """Read-only object array of the entries."""
        return self._value

    @property
    def entries(self) -> Tuple[Tuple[Entry, ...], ...]:
        return tuple(tuple(self._coerce(x) for x in row) for row in self._value)

    @property
    def T(self) -> 'Matrix':
        return self.transpose()

    def transpose(self) -> 'Matrix':
        return type(self)._wrap(self._value.T.copy())

    def tolist(self):
        return [list(row) for row in self.entries]

    def nonzero(self) -> Iterator[Tuple[int, int, Entry]]:
        """Yields (row, col, entry) for the nonzero entries in row-major order."""
        for i, j in zip(*np.nonzero(self._value != 0)):
            yield int(i), int(j), self._value[i, j]

    def is_zero(self) -> bool:
        return not np.any(self._value != 0)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def rank(self, field_char: int = 0) -> int:
        return rank(self, field_char)

    def determinant(self) -> Fraction:
        """Exact determinant of a square matrix."""
        if not self.is_square():
            raise ValueError(f'Determinant of a non square {self.shape} matrix')
        if self.rows == 0:
            return Fraction(1)
        det = QQ.to_sympy(_domain_matrix(self, QQ, 0).to_dense().det())
        return Fraction(int(det.p), int(det.q))

    def _result_type(self, other: 'Matrix'):
        return IntMatrix if isinstance(self, IntMatrix) and isinstance(other, IntMatrix) else Matrix

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f'Cannot multiply {self.shape} by {other.shape}', (self.shape, other.shape))
        cls = self._result_type(other)
        if self.cols == 0:
            return cls.zeros(self.rows, other.cols)
        return cls._wrap(np.asarray(np.dot(self._value, other._value), dtype=object).reshape(self.rows, other.cols))

    def _elementwise(self, other: 'Matrix', op) -> 'Matrix':
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f'Shape mismatch {self.shape} vs {other.shape}', (self.shape, other.shape))
        return self._result_type(other)._wrap(op(self._value, other._value))

    def __add__(self, other: 'Matrix') -> 'Matrix':
        return self._elementwise(other, np.add)

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        return self._elementwise(other, np.subtract)

    def __neg__(self) -> 'Matrix':
        return type(self)._wrap(-self._value)

    def __mul__(self, scalar: Entry) -> 'Matrix':
        if isinstance(scalar, Matrix):
            return NotImplemented
        scalar = self._coerce(scalar)
        cls = type(self) if isinstance(scalar, int) else Matrix
        return cls._wrap(self._value * scalar)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Matrix':
        if not self.is_square() or k < 0:
            raise ValueError(f'Power {k} of a {self.shape} matrix is undefined')
        result = type(self).identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.all(self._value == other._value))

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return f'{type(self).__name__}({self.tolist()}, shape={self.shape})'


class IntMatrix(Matrix):
    """Immutable matrix with integer entries, used where torsion matters."""
    __slots__ = ()

    @staticmethod
    def _coerce(x: Entry) -> int:
        x = Matrix._coerce(x)
        if not isinstance(x, int):
            raise ValueError(f'IntMatrix entries must be integers, got {x}', x)
        return x

    def to_rational(self) -> Matrix:
        return Matrix._wrap(self._value.copy())


def check_field_char(field_char: int):
    """Raises ValueError unless field_char is 0 or a prime."""
    if field_char != 0 and not (field_char > 1 and isprime(field_char)):
        raise ValueError(f'Field characteristic must be 0 or a prime, got {field_char}', field_char)


def _domain_element(x: Entry, domain, field_char: int):
    q = Fraction(x)
    if field_char == 0:
        return domain(q.numerator, q.denominator)
    if q.denominator % field_char == 0:
        raise ValueError(f'Entry {q} is not defined in characteristic {field_char}', q)
    return domain(q.numerator) / domain(q.denominator)


def _domain_matrix(m: Matrix, domain, field_char: int) -> DomainMatrix:
    rows = {}
    for i, j, x in m.nonzero():
        y = _domain_element(x, domain, field_char)
        if y:
            rows.setdefault(i, {})[j] = y
    return DomainMatrix(rows, m.shape, domain)


def rank(m: Matrix, field_char: int = 0) -> int:
    """Exact rank of a matrix over the rationals (field_char=0) or over the prime field F_p.

    Args:
        m: the matrix.
        field_char: 0 or a prime.

    Returns:
        The rank as a python int.
    """
    check_field_char(field_char)
    if m.rows == 0 or m.cols == 0:
        return 0
    domain = QQ if field_char == 0 else GF(field_char)
    return int(_domain_matrix(m, domain, field_char).rank())
