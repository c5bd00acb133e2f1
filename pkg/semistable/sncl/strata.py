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


__all__ = ['StratumEntry', 'StratumTables', 'stratum_tables']

from typing import Dict, NamedTuple, Tuple

from semistable.sncl.configuration import Configuration


class StratumEntry(NamedTuple):
    """Betti numbers (b_0, b_1, ...) and coherent dimensions (h^0(O), h^1(O), ...) of one stratum."""
    betti: Tuple[int, ...]
    coherent: Tuple[int, ...]


class StratumTables(NamedTuple):
    """Cohomology tables of the strata Y^(0) (components), Y^(1) (double curves) and Y^(2) (triple points)."""
    components: Dict[str, StratumEntry]
    curves: Dict[str, StratumEntry]
    points: Dict[str, StratumEntry]

    def stratum(self, s: int) -> Dict[str, StratumEntry]:
        return (self.components, self.curves, self.points)[s] if 0 <= s <= 2 else {}

    def betti(self, s: int, t: int) -> int:
        """dim H^t(Y^(s))."""
        return sum(e.betti[t] for e in self.stratum(s).values() if 0 <= t < len(e.betti))

    def coherent(self, s: int, t: int) -> int:
        """dim H^t(Y^(s), O)."""
        return sum(e.coherent[t] for e in self.stratum(s).values() if 0 <= t < len(e.coherent))

    def chi(self, s: int) -> int:
        """Holomorphic Euler characteristic of Y^(s)."""
        return sum(sum((-1) ** t * h for t, h in enumerate(e.coherent)) for e in self.stratum(s).values())


def stratum_tables(c: Configuration) -> StratumTables:
    """Betti and coherent tables of every stratum; a genus g curve has Betti (1, 2g, 1) and coherent (1, g)."""
    return StratumTables({x.id: StratumEntry(x.kind.betti, x.kind.coherent) for x in c.components},
                         {x.id: StratumEntry((1, 2 * x.genus, 1), (1, x.genus)) for x in c.double_curves},
                         {x.id: StratumEntry((1,), (1,)) for x in c.triple_points})
