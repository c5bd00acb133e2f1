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


__all__ = ['NilpotentOperator', 'jordan_operator', 'nilpotency_index', 'wedge_square']

import itertools
from typing import Sequence

from semistable.errors import PreconditionError
from semistable.linalg.matrix import IntMatrix, Matrix
from semistable.util import index_map


class NilpotentOperator:
    """A square matrix acting on a finite dimensional space, expected to be nilpotent."""
    __slots__ = ('matrix',)

    def __init__(self, matrix: Matrix):
        if not matrix.is_square():
            raise ValueError(f'Operator matrix must be square, got shape {matrix.shape}', matrix.shape)
        self.matrix = matrix

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def rank(self) -> int:
        return self.matrix.rank()

    def conjugate(self, p: Matrix, p_inv: Matrix) -> 'NilpotentOperator':
        """Returns the operator p N p^-1, with p_inv the inverse of p."""
        return NilpotentOperator(p @ self.matrix @ p_inv)

    def __eq__(self, other):
        return isinstance(other, NilpotentOperator) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f'NilpotentOperator(dim={self.dim}, matrix={self.matrix.tolist()})'


def jordan_operator(block_sizes: Sequence[int]) -> NilpotentOperator:
    """Nilpotent operator in Jordan form with the given block sizes, ones on the superdiagonal of each block."""
    if any(size < 1 for size in block_sizes):
        raise ValueError(f'Jordan blocks must have positive sizes, got {list(block_sizes)}', tuple(block_sizes))
    dim = sum(block_sizes)
    rows = [[0] * dim for _ in range(dim)]
    start = 0
    for size in block_sizes:
        for i in range(start, start + size - 1):
            rows[i][i + 1] = 1
        start += size
    return NilpotentOperator(IntMatrix(rows, shape=(dim, dim)))


def nilpotency_index(n: NilpotentOperator) -> int:
    """Smallest k >= 1 with N^k = 0; the zero operator has index 1.

    Raises:
        PreconditionError: if no power up to the dimension vanishes.
    """
    power = n.matrix
    for k in range(1, max(n.dim, 1) + 1):
        if power.is_zero():
            return k
        power = power @ n.matrix
    raise PreconditionError(f'Operator of dimension {n.dim} is not nilpotent', n.dim)


def wedge_square(n: NilpotentOperator) -> NilpotentOperator:
    """The operator N∧1 + 1∧N induced on the exterior square.

    The basis of the exterior square is e_i∧e_j for i < j in lexicographic order.
    """
    pairs = list(itertools.combinations(range(n.dim), 2))
    position = index_map(pairs)
    rows = [[0] * len(pairs) for _ in pairs]
    for col, (i, j) in enumerate(pairs):
        # N e_i ∧ e_j
        for k, _, x in (t for t in n.matrix.nonzero() if t[1] == i):
            if k != j:
                rows[position[(min(k, j), max(k, j))]][col] += x if k < j else -x
        # e_i ∧ N e_j
        for k, _, x in (t for t in n.matrix.nonzero() if t[1] == j):
            if k != i:
                rows[position[(min(i, k), max(i, k))]][col] += x if i < k else -x
    cls = IntMatrix if isinstance(n.matrix, IntMatrix) else Matrix
    return NilpotentOperator(cls(rows, shape=(len(pairs), len(pairs))))
