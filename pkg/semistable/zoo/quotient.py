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


"""Configurations from triangulated surfaces and their quotients by free simplicial actions."""

__all__ = ['free_quotient', 'orbits', 'triangulated']

import collections
import itertools
import logging
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from semistable.constants import ComponentTag, CoverBehavior, CurveRole
from semistable.covers import CoverMap, CoverSheet
from semistable.errors import StructuralError
from semistable.sncl import Component, Configuration, DoubleCurve, Side, TriplePoint

logger = logging.getLogger(__name__)

Triangle = Tuple[int, int, int]


def _component_id(v: int) -> str:
    return f'Y{v}'


def _curve_id(a: int, b: int) -> str:
    return 'C{}_{}'.format(*sorted((a, b)))


def _point_id(t: Sequence[int]) -> str:
    return 'P{}_{}_{}'.format(*sorted(t))


def triangulated(surface_class: ComponentTag, triangles: Sequence[Triangle], *, b2: Optional[int] = None,
                 canonical_order: Optional[int] = None, name: str = '') -> Configuration:
    """Type III configuration whose dual complex is a simplicial surface.

    Every vertex becomes a rational component, every edge a rational double curve and every triangle a triple
    point.

    Args:
        surface_class: class of the generic fibre.
        triangles: vertex triples of the triangles; vertices are integers.
        b2: second Betti number of every component, the minimal default when None.
        canonical_order: canonical order of the configuration, the class default when None.
        name: configuration name.
    """
    triangles = [tuple(sorted(t)) for t in triangles]
    vertices = sorted({v for t in triangles for v in t})
    count = collections.Counter(e for t in triangles for e in itertools.combinations(t, 2))
    cycle = CurveRole.CYCLE_MEMBER
    return Configuration(surface_class,
                         [Component.of(_component_id(v), ComponentTag.RATIONAL, b2) for v in vertices],
                         [DoubleCurve(_curve_id(a, b), 0, Side(_component_id(a), cycle), Side(_component_id(b), cycle),
                                      n) for (a, b), n in sorted(count.items())],
                         [TriplePoint(_point_id(t), tuple(_curve_id(a, b) for a, b in itertools.combinations(t, 2)),
                                      tuple(_component_id(v) for v in t)) for t in sorted(triangles)],
                         canonical_order=canonical_order, name=name)


def orbits(action: Mapping[Hashable, Hashable], items: Sequence[Hashable]) -> List[Tuple[Hashable, ...]]:
    """Orbits of a permutation on a set of items, each listed from its first item in the input order."""
    seen, result = set(), []
    for x in items:
        if x in seen:
            continue
        orbit = [x]
        y = action[x]
        while y != x:
            orbit.append(y)
            y = action[y]
        seen.update(orbit)
        result.append(tuple(orbit))
    return result


def free_quotient(triangles: Sequence[Triangle], action: Mapping[int, int], *, total_class: ComponentTag,
                  base_class: ComponentTag, b2: Optional[int] = None, total_name: str = '',
                  name: str = '') -> CoverMap:
    """Cover of the quotient of a triangulated configuration by a free simplicial action.

    Args:
        triangles: vertex triples of the total triangulation.
        action: permutation of the vertices generating the deck group; it must map triangles to triangles.
        total_class: class of the covering configuration.
        base_class: class of the quotient.
        b2: second Betti number of every component on both sides.
        total_name: name of the covering configuration.
        name: name of the quotient.

    Returns:
        The cover map; its base is the quotient configuration.

    Raises:
        StructuralError: if the action is not a free simplicial action or the quotient is not simplicial.
    """
    triangles = sorted(tuple(sorted(t)) for t in triangles)
    vertices = sorted({v for t in triangles for v in t})
    vertex_orbits = orbits(action, vertices)
    degree = len(vertex_orbits[0])
    rep: Dict[int, int] = {v: min(orbit) for orbit in vertex_orbits for v in orbit}
    edges = sorted({e for t in triangles for e in itertools.combinations(t, 2)})
    problems = []
    if any(len(orbit) != degree for orbit in vertex_orbits):
        problems.append(f'vertex orbits have sizes {sorted({len(x) for x in vertex_orbits})}')
    for cells in (edges, triangles):
        known = set(cells)
        moved = {x: tuple(sorted(action[v] for v in x)) for x in cells}
        if any(y not in known for y in moved.values()):
            problems.append(f'the action does not preserve the {len(cells[0])}-vertex cells')
            continue
        sizes = {len(x) for x in orbits(moved, cells)}
        if sizes != {degree}:
            problems.append(f'orbits of {len(cells[0])}-vertex cells have sizes {sorted(sizes)}')
    if problems:
        raise StructuralError('Action is not free and simplicial', problems)

    base_triangles = sorted({tuple(sorted(rep[v] for v in t)) for t in triangles})
    if len(base_triangles) * degree != len(triangles) or any(len(set(t)) != 3 for t in base_triangles):
        raise StructuralError('Quotient is not simplicial', [f'{len(base_triangles)} triangles in the quotient'])
    total = triangulated(total_class, triangles, b2=b2, name=total_name)
    base = triangulated(base_class, base_triangles, b2=b2, canonical_order=degree, name=name)
    logger.debug('Quotient of %d triangles by a free action of order %d', len(triangles), degree)
    return CoverMap(degree, total, base,
                    {_component_id(v): CoverSheet(_component_id(rep[v]), CoverBehavior.SPLIT_COPIES) for v in vertices},
                    {_curve_id(a, b): _curve_id(rep[a], rep[b]) for a, b in edges},
                    {_point_id(t): _point_id([rep[v] for v in t]) for t in triangles})
