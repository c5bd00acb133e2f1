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


"""Links of vertices and edges in Δ-complexes."""

__all__ = ['edge_link', 'is_circle', 'vertex_link']

import itertools
from collections import Counter

from semistable.topology.delta import DeltaComplex
from semistable.util import index_map


def vertex_link(g: DeltaComplex, v: int) -> DeltaComplex:
    """The link of a vertex, a Δ-complex of dimension dim(g) - 1.

    The (m-1)-cells of the link are the corners (σ, c) of m-cells σ whose c-th vertex is v. Dropping the i-th
    remaining vertex of a corner gives the corner of the matching face of σ.
    """
    corners = []
    for m in range(1, g.dim + 1):
        corners.append([(k, c) for k in range(g.count(m)) for c, x in enumerate(g.vertices_of(m, k)) if x == v])
    positions = [index_map(level) for level in corners]
    faces = []
    for m in range(2, g.dim + 1):
        cells = []
        for k, c in corners[m - 1]:
            others = [p for p in range(m + 1) if p != c]
            cells.append(tuple(positions[m - 2][(g.faces(m, k)[p], c if c < p else c - 1)] for p in others))
        faces.append(cells)
    labels = [[corner for corner in level] for level in corners]
    return DeltaComplex(len(corners[0]) if corners else 0, *faces, labels=labels)


def edge_link(g: DeltaComplex, e: int) -> DeltaComplex:
    """The link of an edge of a 3-dimensional Δ-complex, as a graph.

    Link vertices are the pairs (t, r) with face r of the triangle t equal to e. Every tetrahedron whose
    vertices at positions c < d are the ones missing from e contributes the link edge joining
    (face d, c) to (face c, d - 1).
    """
    vertices = [(t, r) for t, r in g.cofaces(1, e)]
    position = index_map(vertices)
    edges = []
    seen = set()
    for t, _ in vertices:
        for tet, _ in g.cofaces(2, t):
            if tet in seen:
                continue
            seen.add(tet)
            for c, d in itertools.combinations(range(4), 2):
                if g.sub_face(3, tet, (c, d)) == e:
                    tet_faces = g.faces(3, tet)
                    edges.append((position[(tet_faces[c], d - 1)], position[(tet_faces[d], c)]))
    return DeltaComplex(len(vertices), edges, labels=[vertices])


def is_circle(g: DeltaComplex) -> bool:
    """Whether g is a nonempty connected graph with every vertex of degree 2."""
    if g.dim != 1:
        return False
    degree = Counter(v for k in range(g.count(1)) for v in g.faces(1, k))
    return all(degree[v] == 2 for v in range(g.count(0))) and g.is_connected()
