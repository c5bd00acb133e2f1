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


__all__ = ['ComponentVerdict', 'LocalReport', 'Violation', 'validate_local']

import collections
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from semistable.constants import KODAIRA_ZERO, ComponentTag, CurveRole
from semistable.sncl.configuration import Component, Configuration, check_structure
from semistable.sncl.dual import dual_complex
from semistable.util import index_map


class Violation(NamedTuple):
    clause: str
    subject: str
    message: str


class ComponentVerdict(NamedTuple):
    """Local verdict of one component; case is one of '1a', '1b', '2a', '2b', 'smooth' or None."""
    component: str
    case: Optional[str]
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return self.case is not None and not self.violations


class LocalReport(NamedTuple):
    verdicts: Tuple[ComponentVerdict, ...]
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations and all(v.ok for v in self.verdicts)

    @property
    def all_violations(self) -> Tuple[Violation, ...]:
        return tuple(x for v in self.verdicts for x in v.violations) + self.violations

    def case(self, component: str) -> Optional[str]:
        return next(v.case for v in self.verdicts if v.component == component)


def _is_cycle(c: Configuration, component: str, curves: List[str]) -> bool:
    """Whether the curves on a component form a cycle, consecutive curves meeting in triple points."""
    edges = [tuple(x for x in p.curves if x in curves) for p in c.points_on(component)]
    if len(edges) != len(curves) or any(len(e) != 2 or e[0] == e[1] for e in edges):
        return False
    if len(curves) == 2:
        return all(set(e) == set(curves) for e in edges)
    if len(set(frozenset(e) for e in edges)) != len(edges):
        return False
    degree = collections.Counter(x for e in edges for x in e)
    if any(degree[x] != 2 for x in curves):
        return False
    index = index_map(curves)
    graph = csr_matrix((np.ones(len(edges)), ([index[a] for a, _ in edges], [index[b] for _, b in edges])),
                       shape=(len(curves), len(curves)))
    return connected_components(graph, directed=False)[0] == 1


def _local_case(c: Configuration, x: Component) -> Tuple[Optional[str], str]:
    curves = c.curves_on(x.id)
    roles = [curve.side_on(x.id).role for curve in curves]
    if x.tag in KODAIRA_ZERO:
        if curves:
            return None, f'a {x.tag.value} component cannot meet other components'
        return 'smooth', ''
    if x.tag == ComponentTag.ELLIPTIC_RULED:
        if len(curves) == 2 and roles == [CurveRole.RULING] * 2 and all(curve.genus == 1 for curve in curves):
            ids = {curve.id for curve in curves}
            if any(ids <= set(p.curves) for p in c.points_on(x.id)):
                return None, 'the two rulings meet'
            return '1a', ''
        if len(curves) == 1 and roles == [CurveRole.TWO_RULING] and curves[0].genus == 1:
            return '1b', ''
        return None, 'boundary is neither two disjoint elliptic rulings nor one elliptic 2-ruling'
    if len(curves) == 1 and roles == [CurveRole.ELLIPTIC_ON_RATIONAL] and curves[0].genus == 1:
        return '2a', ''
    if len(curves) >= 2 and roles == [CurveRole.CYCLE_MEMBER] * len(curves) and all(
            curve.genus == 0 for curve in curves):
        if _is_cycle(c, x.id, [curve.id for curve in curves]):
            return '2b', ''
        return None, 'rational boundary curves do not form a cycle'
    return None, 'boundary is neither one elliptic curve nor a cycle of rational curves'


def _role_violations(c: Configuration) -> List[Violation]:
    violations = []
    for curve in c.double_curves:
        for side in curve.sides:
            tag = c.component(side.component).tag
            if side.role in (CurveRole.RULING, CurveRole.TWO_RULING):
                ok = tag == ComponentTag.ELLIPTIC_RULED and curve.genus == 1
            elif side.role == CurveRole.CYCLE_MEMBER:
                ok = tag == ComponentTag.RATIONAL and curve.genus == 0
            else:
                ok = tag == ComponentTag.RATIONAL and curve.genus == 1
            if not ok:
                violations.append(Violation('role-side', curve.id, f'role {side.role.value} of a genus {curve.genus} '
                                                                   f'curve on {tag.value} component {side.component}'))
    return violations


def validate_local(c: Configuration) -> LocalReport:
    """Checks the local anticanonical constraints of every component and curve.

    Every component of Kodaira dimension -inf must have one of four boundaries: two disjoint elliptic rulings
    (1a) or one elliptic 2-ruling (1b) on an elliptic ruled surface, one elliptic curve (2a) or a cycle of
    rational curves (2b) on a rational surface. A double curve of genus g must carry 2 - 2g triple points.

    Raises:
        StructuralError: if the configuration fails check_structure.
    """
    check_structure(c)
    verdicts = []
    for x in c.components:
        case, message = _local_case(c, x)
        verdicts.append(ComponentVerdict(x.id, case, (Violation('paac', x.id, message),) if case is None else ()))
    violations = _role_violations(c)
    for curve in c.double_curves:
        if curve.triple_point_count != 2 - 2 * curve.genus:
            violations.append(Violation('genus-formula', curve.id,
                                        f'genus {curve.genus} curve carries {curve.triple_point_count} triple points, '
                                        f'expected {2 - 2 * curve.genus}'))
    if not dual_complex(c).is_connected():
        violations.append(Violation('connected', c.name or 'configuration', 'special fibre is not connected'))
    return LocalReport(tuple(verdicts), tuple(violations))
