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


__all__ = ['TransferTemplate']

from typing import Dict, Mapping, Optional, Tuple

from semistable.constants import ComponentTag, CurveRole
from semistable.errors import MissingTemplateError
from semistable.linalg import Matrix
from semistable.sncl import Configuration, TransferOverride


class TransferTemplate:
    """Restriction maps on H^1 for every incidence flag component ⊃ curve.

    Defaults: a ruling or a 2-ruling on an elliptic ruled surface restricts H^1 isomorphically (identity in fixed
    bases); a rational component has no H^1, so its maps are zero. Kodaira dimension zero components carry no
    double curves and have no default. Overrides replace the Betti map H^1(V) -> H^1(C), the coherent map
    H^1(O_V) -> H^1(O_C), or both.
    """

    def __init__(self, overrides: Mapping[Tuple[str, str], TransferOverride] = None):
        self.overrides: Dict[Tuple[str, str], TransferOverride] = dict(overrides or {})

    @classmethod
    def for_configuration(cls, c: Configuration) -> 'TransferTemplate':
        """Template with the default maps and the overrides declared by the configuration."""
        return cls({(t.component, t.curve): t for t in c.transfers})

    def _default(self, c: Configuration, component: str, curve: str, betti: bool) -> Matrix:
        kind = c.component(component).kind
        target = c.curve(curve)
        source_dim = kind.betti[1] if betti else kind.coherent[1]
        target_dim = 2 * target.genus if betti else target.genus
        if kind.tag == ComponentTag.RATIONAL:
            return Matrix.zeros(target_dim, source_dim)
        role = target.side_on(component).role
        if kind.tag == ComponentTag.ELLIPTIC_RULED and role in (CurveRole.RULING, CurveRole.TWO_RULING):
            if source_dim != target_dim:
                raise MissingTemplateError(component, curve, f'dimensions {source_dim} and {target_dim} differ.')
            return Matrix.identity(source_dim)
        raise MissingTemplateError(component, curve, f'No default for role {role.value} on {kind.tag.value}.')

    def _lookup(self, c: Configuration, component: str, curve: str, betti: bool) -> Matrix:
        override: Optional[TransferOverride] = self.overrides.get((component, curve))
        rows = None if override is None else (override.betti if betti else override.coherent)
        if rows is None:
            return self._default(c, component, curve, betti)
        kind, target = c.component(component).kind, c.curve(curve)
        shape = (2 * target.genus, kind.betti[1]) if betti else (target.genus, kind.coherent[1])
        return Matrix(rows, shape=shape)

    def betti(self, c: Configuration, component: str, curve: str) -> Matrix:
        """The map H^1(component) -> H^1(curve)."""
        return self._lookup(c, component, curve, True)

    def coherent(self, c: Configuration, component: str, curve: str) -> Matrix:
        """The map H^1(component, O) -> H^1(curve, O)."""
        return self._lookup(c, component, curve, False)

    def declared_rank(self, c: Configuration, component: str, curve: str) -> int:
        return self.betti(c, component, curve).rank()
