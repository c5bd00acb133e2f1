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


__all__ = ['dual_complex', 'dual_graph']

from semistable.errors import StructuralError
from semistable.sncl.configuration import Configuration
from semistable.topology import DeltaComplex
from semistable.util import index_map


def dual_complex(c: Configuration) -> DeltaComplex:
    """The dual complex Γ: a vertex per component, an edge per double curve and a triangle per triple point.

    Edges run from the component listed first to the one listed later, so every triangle has its vertices
    ordered by component position.
    """
    position = index_map(x.id for x in c.components)
    curve_position = index_map(x.id for x in c.double_curves)
    edges = []
    for curve in c.double_curves:
        start, end = sorted(position[x] for x in curve.components)
        edges.append((end, start))
    triangles = []
    for p in c.triple_points:
        a, b, cc = sorted(position[x] for x in p.components)
        by_pair = {frozenset(position[x] for x in c.curve(curve).components): curve_position[curve]
                   for curve in p.curves}
        triangles.append((by_pair[frozenset((b, cc))], by_pair[frozenset((a, cc))], by_pair[frozenset((a, b))]))
    labels = [[x.id for x in c.components], [x.id for x in c.double_curves], [x.id for x in c.triple_points]]
    return DeltaComplex(len(c.components), edges, triangles, labels=labels)


def dual_graph(c: Configuration) -> DeltaComplex:
    """The dual complex of a configuration, which must be connected.

    Raises:
        StructuralError: if the dual complex is disconnected.
    """
    gamma = dual_complex(c)
    if not gamma.is_connected():
        count = gamma.components()[0]
        raise StructuralError('Special fibre is not connected', [f'dual complex has {count} connected components'])
    return gamma
