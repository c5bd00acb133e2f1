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


__all__ = ['CLASS_SURFACES', 'Clause', 'TypeVerdict', 'classify']

import collections
import logging
from typing import List, NamedTuple, Optional, Tuple

from semistable.constants import ComponentTag, DegenerationType, SurfaceTag
from semistable.errors import PreconditionError
from semistable.sncl.configuration import Configuration
from semistable.sncl.dual import dual_graph
from semistable.sncl.local import LocalReport, validate_local
from semistable.topology import SurfaceClass, classify_surface

logger = logging.getLogger(__name__)

# Topology of the dual complex of a Type III degeneration of each class.
CLASS_SURFACES = {
    ComponentTag.K3: SurfaceTag.SPHERE,
    ComponentTag.ENRIQUES: SurfaceTag.REAL_PROJECTIVE_PLANE,
    ComponentTag.ABELIAN: SurfaceTag.TORUS,
    ComponentTag.BIELLIPTIC: SurfaceTag.KLEIN_BOTTLE,
}


class Clause(NamedTuple):
    name: str
    ok: bool
    message: str = ''

    @classmethod
    def judge(cls, name: str, ok: bool, passed: str, failed: str) -> 'Clause':
        """Clause whose message describes the outcome: passed when ok holds, failed otherwise."""
        return cls(name, ok, passed if ok else failed)


class TypeVerdict(NamedTuple):
    """Classification of a configuration; type is None for a rejection.

    shape is 'smooth', 'chain', 'cycle' or 'triangulation'. gamma certifies the dual complex of Type III.
    """
    surface_class: ComponentTag
    type: Optional[DegenerationType]
    shape: Optional[str]
    gamma: Optional[SurfaceClass]
    diagnostics: Tuple[Clause, ...]

    @property
    def ok(self) -> bool:
        return self.type is not None

    @property
    def failed(self) -> Tuple[Clause, ...]:
        return tuple(x for x in self.diagnostics if not x.ok)


def _graph_shape(c: Configuration) -> Optional[str]:
    n, e = len(c.components), len(c.double_curves)
    degree = collections.Counter(x for curve in c.double_curves for x in curve.components)
    if e == n - 1 and all(degree[x.id] <= 2 for x in c.components):
        return 'chain'
    if e == n and all(degree[x.id] == 2 for x in c.components):
        return 'cycle'
    return None


def _chain_ends(c: Configuration) -> List[str]:
    degree = collections.Counter(x for curve in c.double_curves for x in curve.components)
    return [x.id for x in c.components if degree[x.id] == 1]


def _type_two(c: Configuration, local: LocalReport) -> Tuple[Optional[str], List[Clause]]:
    shape = _graph_shape(c)
    clauses = [Clause('no-triple-points', True, 'no triple points')]
    cls = c.surface_class
    if cls in (ComponentTag.K3, ComponentTag.ENRIQUES):
        allowed = ('chain',)
    elif cls == ComponentTag.ABELIAN:
        allowed = ('cycle',)
    else:
        allowed = ('chain', 'cycle')
    clauses.append(Clause.judge('shape', shape in allowed, f'dual graph is {shape}',
                                f'dual graph is {shape or "neither a chain nor a cycle"}, '
                                f'expected {" or ".join(allowed)}'))
    if shape not in allowed:
        return None, clauses
    ends = _chain_ends(c) if shape == 'chain' else []
    cases = sorted(local.case(x) for x in ends)
    if cls == ComponentTag.K3:
        clauses.append(Clause.judge('ends', cases == ['2a', '2a'], 'both chain ends are rational',
                                    f'chain ends have cases {cases}, expected two rational'))
    elif cls == ComponentTag.ENRIQUES:
        clauses.append(Clause.judge('ends', cases == ['1b', '2a'], 'chain ends are one rational and one 2-ruling end',
                                    f'chain ends have cases {cases}, expected one rational and one 2-ruling end'))
    elif shape == 'chain':
        clauses.append(Clause.judge('ends', cases == ['1b', '1b'], 'both chain ends carry a 2-ruling',
                                    f'chain ends have cases {cases}, expected two 2-ruling ends'))
    inner = [x.id for x in c.components if x.id not in ends]
    bad = [x for x in inner if local.case(x) != '1a']
    clauses.append(Clause.judge('inner-rulings', not bad,
                                'every inner component is elliptic ruled with two rulings',
                                f'components {bad} are not elliptic ruled with two rulings'))
    return shape, clauses


def _type_three(c: Configuration, local: LocalReport) -> Tuple[Optional[SurfaceClass], List[Clause]]:
    bad = [x.id for x in c.components if local.case(x.id) != '2b']
    clauses = [Clause.judge('rational-cycles', not bad, 'every component is rational with a cycle of rational curves',
                            f'components {bad} are not rational with a cycle of rational curves')]
    gamma = classify_surface(dual_graph(c))
    expected = CLASS_SURFACES[c.surface_class]
    clauses.append(Clause.judge('gamma-surface', gamma.tag == expected, f'dual complex is {gamma}',
                                f'dual complex is {gamma}, expected {expected.value}'))
    return gamma, clauses


def classify(c: Configuration) -> TypeVerdict:
    """Matches a locally valid configuration against the Type I, II and III shapes of its class.

    A single component is Type I, a configuration without triple points is Type II and one with triple points
    is Type III; the verdict lists the clauses checked for that Type, and is a rejection if any failed.

    Raises:
        PreconditionError: if the configuration fails validate_local.
    """
    local = validate_local(c)
    if not local.ok:
        raise PreconditionError('Configuration fails local validation', [str(v) for v in local.all_violations])
    cls = c.surface_class
    if len(c.components) == 1:
        tag = c.components[0].tag
        clauses = [Clause.judge('smooth-kind', tag == cls, f'single component is {tag.value}',
                                f'single component is {tag.value}, expected {cls.value}')]
        kind, shape, gamma = DegenerationType.I, 'smooth', None
    elif not c.triple_points:
        shape, clauses = _type_two(c, local)
        kind, gamma = DegenerationType.II, None
    else:
        gamma, clauses = _type_three(c, local)
        kind, shape = DegenerationType.III, 'triangulation'
    ok = all(x.ok for x in clauses)
    logger.debug('%s: %s candidate %s', c.name, cls.value, 'accepted' if ok else 'rejected')
    return TypeVerdict(cls, kind if ok else None, shape, gamma, tuple(clauses))
