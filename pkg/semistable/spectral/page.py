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


__all__ = ['SpectralPage', 'Summand', 'compute_E2']

from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Tuple

from semistable.linalg import Matrix, check_field_char, cohomology_dims
from semistable.typing import Bidegree


class Summand(NamedTuple):
    """The summand H^k(Y^(a))(-j) of an E_1 term."""
    j: int
    a: int
    k: int
    size: int


class SpectralPage:
    """Dimensions of the terms E_r^{s,t} of a spectral sequence, with the differentials d_1 on the first page.

    Pages are immutable. Differentials map E_1^{s,t} to E_1^{s+1,t}; a missing differential is zero.
    """

    def __init__(self, r: int, dims: Mapping[Bidegree, int], differentials: Optional[Mapping[Bidegree, Matrix]] = None,
                 summands: Optional[Mapping[Bidegree, Tuple[Summand, ...]]] = None, field_char: int = 0,
                 notes: Iterable[str] = ()):
        """Creates a page.

        Args:
            r: page index.
            dims: map (s, t) -> dim E_r^{s,t}; zero terms may be omitted.
            differentials: map (s, t) -> matrix of d_1 leaving E_1^{s,t}, only allowed when r == 1.
            summands: optional decomposition of each term.
            field_char: characteristic of the coefficient field.
            notes: conventions used to build the page, carried into reports.
        """
        differentials = dict(differentials or {})
        if differentials and r != 1:
            raise ValueError(f'Differentials are only stored on the first page, got page {r}', r)
        check_field_char(field_char)
        self.r = r
        self._dims: Dict[Bidegree, int] = {st: int(d) for st, d in dims.items() if d}
        for (s, t), d in differentials.items():
            expected = (self.dim(s + 1, t), self.dim(s, t))
            if d.shape != expected:
                raise ValueError(f'd_1 at {(s, t)} has shape {d.shape}, expected {expected}', (s, t))
        self._differentials = differentials
        self.summands = dict(summands or {})
        self.field_char = field_char
        self.notes = tuple(notes)

    @property
    def dims(self) -> Dict[Bidegree, int]:
        return dict(self._dims)

    def dim(self, s: int, t: int) -> int:
        return self._dims.get((s, t), 0)

    def d(self, s: int, t: int) -> Matrix:
        """d_1: E_1^{s,t} -> E_1^{s+1,t}."""
        if (s, t) in self._differentials:
            return self._differentials[(s, t)]
        return Matrix.zeros(self.dim(s + 1, t), self.dim(s, t))

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(sorted({t for _, t in self._dims}))

    def row(self, t: int) -> Dict[int, int]:
        return {s: d for (s, tt), d in sorted(self._dims.items()) if tt == t}

    def total(self, n: int) -> int:
        """Σ_{s+t=n} dim E_r^{s,t}."""
        return sum(d for (s, t), d in self._dims.items() if s + t == n)

    def euler_characteristic(self) -> int:
        return sum((-1) ** (s + t) * d for (s, t), d in self._dims.items())

    def check(self):
        """Raises StructuralError unless d_1 ∘ d_1 = 0 on every row."""
        for t in self.rows:
            self._row_cohomology(t)

    def _row_cohomology(self, t: int) -> Dict[int, int]:
        spaces = self.row(t)
        if not spaces:
            return {}
        low, high = min(spaces), max(spaces)
        spaces = {s: self.dim(s, t) for s in range(low, high + 1)}
        maps = {s: self.d(s, t) for s in range(low, high) if (s, t) in self._differentials}
        return cohomology_dims(spaces, maps, self.field_char)

    def __eq__(self, other):
        return isinstance(other, SpectralPage) and self.r == other.r and self._dims == other._dims

    def __repr__(self):
        return f'SpectralPage(r={self.r}, dims={dict(sorted(self._dims.items()))})'


def compute_E2(p: SpectralPage) -> SpectralPage:
    """The E_2 page: cohomology of every row of the E_1 page under d_1.

    Raises:
        StructuralError: if d_1 ∘ d_1 does not vanish.
    """
    if p.r != 1:
        raise ValueError(f'compute_E2 expects an E_1 page, got page {p.r}', p.r)
    dims = {}
    for t in p.rows:
        dims.update({(s, t): d for s, d in p._row_cohomology(t).items()})
    return SpectralPage(2, dims, field_char=p.field_char, notes=p.notes)
