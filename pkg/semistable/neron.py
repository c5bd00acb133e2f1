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


"""Torus rank of the reduction of an abelian surface and the degeneration type it forces."""

__all__ = ['UniformizationDatum', 'monodromy_on_h1', 'monodromy_on_h2', 'type_from_rank']

from typing import NamedTuple

from semistable.constants import DegenerationType
from semistable.linalg import NilpotentOperator, jordan_operator, nilpotency_index, wedge_square

H1_DIM = 4


class UniformizationDatum(NamedTuple):
    """Ranks of the toric and abelian parts of the reduction of an abelian surface."""
    torus_rank: int

    @property
    def abelian_rank(self) -> int:
        return 2 - self.torus_rank

    def check(self):
        if self.torus_rank not in (0, 1, 2):
            raise ValueError(f'Torus rank of an abelian surface is 0, 1 or 2, got {self.torus_rank}', self.torus_rank)


def monodromy_on_h1(d: UniformizationDatum) -> NilpotentOperator:
    """N on the 4 dimensional H^1 with N^2 = 0 and rank N equal to the torus rank, in Jordan form."""
    d.check()
    return jordan_operator([2] * d.torus_rank + [1] * (H1_DIM - 2 * d.torus_rank))


def monodromy_on_h2(d: UniformizationDatum) -> NilpotentOperator:
    """N induced on H^2 = ∧²H^1."""
    return wedge_square(monodromy_on_h1(d))


def type_from_rank(d: UniformizationDatum) -> DegenerationType:
    """Type I, II or III as the torus rank is 0, 1 or 2, read from the nilpotency index on H^2."""
    return DegenerationType(nilpotency_index(monodromy_on_h2(d)))
