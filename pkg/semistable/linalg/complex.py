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

__all__ = ['ChainComplex', 'IntegerHomology', 'cohomology_dims', 'homology_dims', 'integer_homology']

import logging
from typing import Dict, Mapping, NamedTuple, Tuple

from semistable.errors import StructuralError
from semistable.linalg.matrix import IntMatrix, Matrix, check_field_char, rank
from semistable.linalg.smith import invariant_factors

logger = logging.getLogger(__name__)


class IntegerHomology(NamedTuple):
    """A finitely generated abelian group Z^rank + Z/t_1 + ... + Z/t_k."""
    rank: int
    torsion: Tuple[int, ...] = ()

    def __str__(self):
        parts = ([f'Z^{self.rank}'] if self.rank > 1 else ['Z'] if self.rank == 1 else [])
        parts += [f'Z/{t}' for t in self.torsion]
        return ' + '.join(parts) or '0'


class ChainComplex:
    """A bounded chain complex of finite dimensional spaces, d_n: C_n -> C_{n-1}."""

    def __init__(self, spaces: Mapping[int, int], differentials: Mapping[int, Matrix] = None):
        """Creates a chain complex.

        Args:
            spaces: map degree -> dimension; degrees must form a contiguous range.
            differentials: map degree n -> matrix of d_n with shape (dim C_{n-1}, dim C_n). Missing degrees are
                zero maps. Differentials leaving the range of degrees are not allowed.

        Raises:
            StructuralError: on non contiguous degrees or mismatched differential shapes.
        """
        differentials = dict(differentials or {})
        degrees = sorted(spaces)
        if degrees and degrees != list(range(degrees[0], degrees[-1] + 1)):
            raise StructuralError('Chain complex degrees are not contiguous', [str(degrees)])
        self.spaces: Dict[int, int] = {n: int(spaces[n]) for n in degrees}
        problems = []
        for n, d in differentials.items():
            expected = (self.dim(n - 1), self.dim(n))
            if n not in self.spaces or d.shape != expected:
                problems.append(f'd_{n} has shape {d.shape}, expected {expected}')
        if problems:
            raise StructuralError('Differential shapes do not match the spaces', problems)
        self.differentials: Dict[int, Matrix] = differentials

    @property
    def degrees(self) -> range:
        if not self.spaces:
            return range(0)
        return range(min(self.spaces), max(self.spaces) + 1)

    def dim(self, n: int) -> int:
        return self.spaces.get(n, 0)

    def d(self, n: int) -> Matrix:
        """The differential d_n: C_n -> C_{n-1}."""
        if n in self.differentials:
            return self.differentials[n]
        return IntMatrix.zeros(self.dim(n - 1), self.dim(n))

    def is_complex(self) -> bool:
        """Whether d_n @ d_{n+1} == 0 for every n."""
        return all((self.d(n) @ self.d(n + 1)).is_zero() for n in self.degrees)

    def check(self):
        """Raises StructuralError naming every degree where d∘d does not vanish."""
        problems = [f'd_{n} d_{n + 1} != 0' for n in self.degrees if not (self.d(n) @ self.d(n + 1)).is_zero()]
        if problems:
            raise StructuralError('Differentials do not square to zero', problems)

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * self.dim(n) for n in self.degrees)

    @classmethod
    def from_cochain(cls, spaces: Mapping[int, int], maps: Mapping[int, Matrix]) -> 'ChainComplex':
        """Builds the chain complex of a cochain complex E^s -> E^{s+1}, placing E^s in degree -s.

        Args:
            spaces: map s -> dim E^s.
            maps: map s -> matrix of E^s -> E^{s+1}, shape (dim E^{s+1}, dim E^s).
        """
        return cls({-s: dim for s, dim in spaces.items()}, {-s: m for s, m in maps.items() if s + 1 in spaces})

    def __repr__(self):
        return f'{type(self).__name__}(spaces={self.spaces})'


def homology_dims(c: ChainComplex, field_char: int = 0) -> Dict[int, int]:
    """Dimensions of the homology of a chain complex over Q or F_p.

    Args:
        c: the chain complex.
        field_char: 0 or a prime.

    Returns:
        Map degree -> dim ker d_n - rank d_{n+1}.

    Raises:
        StructuralError: if the differentials do not square to zero.
    """
    check_field_char(field_char)
    c.check()
    ranks = {n: rank(c.d(n), field_char) for n in range(c.degrees.start, c.degrees.stop + 1)}
    return {n: c.dim(n) - ranks[n] - ranks[n + 1] for n in c.degrees}


def cohomology_dims(spaces: Mapping[int, int], maps: Mapping[int, Matrix], field_char: int = 0) -> Dict[int, int]:
    """Dimensions of the cohomology of a cochain complex E^s -> E^{s+1}, keyed by s."""
    homology = homology_dims(ChainComplex.from_cochain(spaces, maps), field_char)
    return {-n: dim for n, dim in homology.items()}


def integer_homology(c: ChainComplex) -> Dict[int, IntegerHomology]:
    """Integral homology of a chain complex with integer differentials.

    Returns:
        Map degree -> IntegerHomology (free rank and torsion coefficients > 1).
    """
    c.check()
    factors = {}
    for n in range(c.degrees.start, c.degrees.stop + 1):
        d = c.d(n)
        if not isinstance(d, IntMatrix):
            d = IntMatrix(d)
        factors[n] = invariant_factors(d) if d.rows and d.cols else []
        logger.debug('d_%d: shape %s, %d invariant factors', n, d.shape, len(factors[n]))
    return {n: IntegerHomology(c.dim(n) - len(factors[n]) - len(factors[n + 1]),
                               tuple(f for f in factors[n + 1] if f > 1))
            for n in c.degrees}
