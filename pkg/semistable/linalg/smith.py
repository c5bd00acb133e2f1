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

__all__ = ['invariant_factors', 'smith_normal_form']

from typing import List, Optional, Tuple

import numpy as np

from semistable.linalg.matrix import IntMatrix

# int64 work arrays are used while every intermediate value provably stays below this bound.
_INT64_LIMIT = 2 ** 62


class _Reduction:
    """Smith reduction workspace.

    Row operations act on `a` and `u`, column operations on `a` and `v`, so that u @ m @ v == a holds
    throughout. Arrays start as int64 and are promoted to python ints (dtype object) before any operation
    that could overflow.
    """

    def __init__(self, m: IntMatrix, track: bool):
        rows, cols = m.shape
        self.track = track
        self.a = m.value.astype(object)
        self.u = np.eye(rows, dtype=object) if track else None
        self.v = np.eye(cols, dtype=object) if track else None
        if self.a.size == 0 or max(abs(x) for x in self.a.flat) < _INT64_LIMIT:
            self._convert(np.int64)

    def _convert(self, dtype):
        self.a = self.a.astype(dtype)
        if self.track:
            self.u = self.u.astype(dtype)
            self.v = self.v.astype(dtype)

    @property
    def fast(self) -> bool:
        return self.a.dtype == np.int64

    def _guard(self, arrays, dst, src, q: int):
        if not self.fast:
            return
        for arr, d, s in arrays:
            if arr.size and abs(q) * int(np.abs(s).max()) + int(np.abs(d).max()) >= _INT64_LIMIT:
                self._convert(object)
                return

    def row_op(self, dst: int, src: int, q: int):
        """Row dst -= q * row src."""
        arrays = [(self.a, self.a[dst], self.a[src])]
        if self.track:
            arrays.append((self.u, self.u[dst], self.u[src]))
        self._guard(arrays, dst, src, q)
        self.a[dst] -= q * self.a[src]
        if self.track:
            self.u[dst] -= q * self.u[src]

    def col_op(self, dst: int, src: int, q: int):
        """Column dst -= q * column src."""
        arrays = [(self.a, self.a[:, dst], self.a[:, src])]
        if self.track:
            arrays.append((self.v, self.v[:, dst], self.v[:, src]))
        self._guard(arrays, dst, src, q)
        self.a[:, dst] -= q * self.a[:, src]
        if self.track:
            self.v[:, dst] -= q * self.v[:, src]

    def swap_rows(self, i: int, j: int):
        if i != j:
            self.a[[i, j]] = self.a[[j, i]]
            if self.track:
                self.u[[i, j]] = self.u[[j, i]]

    def swap_cols(self, i: int, j: int):
        if i != j:
            self.a[:, [i, j]] = self.a[:, [j, i]]
            if self.track:
                self.v[:, [i, j]] = self.v[:, [j, i]]

    def negate_row(self, i: int):
        self.a[i] = -self.a[i]
        if self.track:
            self.u[i] = -self.u[i]

    def _smallest(self, block: np.ndarray) -> Optional[Tuple[int, int]]:
        """Position of the smallest nonzero |entry|, ties broken by lowest row then lowest column."""
        mask = block != 0
        if not np.any(mask):
            return None
        magnitude = np.abs(block)
        best = min(magnitude[mask])
        i, j = np.argwhere(mask & (magnitude == best))[0]
        return int(i), int(j)

    def select_pivot(self, t: int) -> bool:
        found = self._smallest(self.a[t:, t:])
        if found is None:
            return False
        self.swap_rows(t, t + found[0])
        self.swap_cols(t, t + found[1])
        return True

    def select_cross_pivot(self, t: int):
        """Moves the smallest nonzero entry of row t and column t to (t, t)."""
        column = self.a[t:, t]
        row = self.a[t, t + 1:]
        candidates = [(abs(x), t + i, t) for i, x in enumerate(column) if x != 0]
        candidates += [(abs(x), t, t + 1 + j) for j, x in enumerate(row) if x != 0]
        _, i, j = min(candidates)
        self.swap_rows(t, i)
        self.swap_cols(t, j)

    def run(self) -> List[int]:
        rows, cols = self.a.shape
        t = 0
        while t < min(rows, cols) and self.select_pivot(t):
            while True:
                dirty = False
                for i in np.nonzero(self.a[t + 1:, t])[0] + t + 1:
                    self.row_op(int(i), t, int(self.a[i, t] // self.a[t, t]))
                    dirty |= self.a[i, t] != 0
                for j in np.nonzero(self.a[t, t + 1:])[0] + t + 1:
                    self.col_op(int(j), t, int(self.a[t, j] // self.a[t, t]))
                    dirty |= self.a[t, j] != 0
                if dirty:
                    self.select_cross_pivot(t)
                    continue
                rest = self.a[t + 1:, t + 1:]
                bad = np.argwhere(rest % self.a[t, t] != 0) if rest.size else ()
                if len(bad) == 0:
                    break
                self.row_op(t, t + 1 + int(bad[0][0]), -1)
            if self.a[t, t] < 0:
                self.negate_row(t)
            t += 1
        return [int(self.a[i, i]) for i in range(t)]


def smith_normal_form(m: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form of an integer matrix.

    Pivots are chosen by smallest absolute value, then lowest row index, then lowest column index, so the
    output is deterministic.

    Args:
        m: the integer matrix.

    Returns:
        (U, D, V) with U @ m @ V == D, U and V unimodular, D diagonal with nonnegative entries d_1 | d_2 | ...
    """
    m = m if isinstance(m, IntMatrix) else IntMatrix(m)
    work = _Reduction(m, track=True)
    work.run()
    return (IntMatrix._wrap(work.u.astype(object)), IntMatrix._wrap(work.a.astype(object)),
            IntMatrix._wrap(work.v.astype(object)))


def invariant_factors(m: IntMatrix) -> List[int]:
    """The nonzero diagonal entries of the Smith normal form of m, without computing the transforms."""
    m = m if isinstance(m, IntMatrix) else IntMatrix(m)
    return _Reduction(m, track=False).run()
