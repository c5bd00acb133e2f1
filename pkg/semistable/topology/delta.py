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


__all__ = ['DeltaComplex', 'euler_characteristic', 'homology', 'integer_homology']

import itertools
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from semistable.errors import StructuralError
from semistable.linalg import ChainComplex, IntMatrix, IntegerHomology, homology_dims
from semistable.linalg import integer_homology as _integer_homology
from semistable.util import index_map

MAX_DIM = 3
CELL_NAMES = ('vertices', 'edges', 'triangles', 'tetrahedra')


class DeltaComplex:
    """A Δ-complex of dimension at most 3.

    An n-cell (n >= 1) is an ordered (n+1)-tuple of indices of (n-1)-cells, face i being the face opposite to
    the i-th vertex. An edge is therefore (end, start). Repeated vertex sets and multi-edges are allowed.
    Optional labels name the cells of each dimension.
    """

    def __init__(self, vertices: int, edges: Sequence[Sequence[int]] = (), triangles: Sequence[Sequence[int]] = (),
                 tetrahedra: Sequence[Sequence[int]] = (), labels: Optional[Sequence[Sequence[Hashable]]] = None):
        """Creates a Δ-complex and checks face references and simplicial identities.

        Args:
            vertices: number of vertices.
            edges: per edge the pair (face 0, face 1) = (end vertex, start vertex).
            triangles: per triangle the three edge indices (face 0, face 1, face 2).
            tetrahedra: per tetrahedron the four triangle indices.
            labels: optional per dimension sequence of cell labels.

        Raises:
            StructuralError: on out of range face references or broken simplicial identities.
        """
        self._faces: Tuple[Tuple[Tuple[int, ...], ...], ...] = (
            (), tuple(tuple(int(f) for f in c) for c in edges), tuple(tuple(int(f) for f in c) for c in triangles),
            tuple(tuple(int(f) for f in c) for c in tetrahedra))
        self._counts = (int(vertices),) + tuple(len(c) for c in self._faces[1:])
        self.labels: Optional[Tuple[Tuple[Hashable, ...], ...]] = None
        if labels is not None:
            self.labels = tuple(tuple(x) for x in labels) + ((),) * (MAX_DIM + 1 - len(labels))
        self._vertices: Optional[List[List[Tuple[int, ...]]]] = None
        self._cofaces: Dict[int, List[List[Tuple[int, int]]]] = {}
        self._check()

    def _check(self):
        problems = []
        for n in range(1, MAX_DIM + 1):
            for k, cell in enumerate(self._faces[n]):
                if len(cell) != n + 1:
                    problems.append(f'{CELL_NAMES[n]}[{k}] has {len(cell)} faces, expected {n + 1}')
                elif any(not 0 <= f < self._counts[n - 1] for f in cell):
                    problems.append(f'{CELL_NAMES[n]}[{k}] refers to a missing {CELL_NAMES[n - 1][:-1]}')
            if self._counts[n] and not self._counts[n - 1]:
                problems.append(f'{CELL_NAMES[n]} present without {CELL_NAMES[n - 1]}')
        if self.labels is not None:
            for n in range(MAX_DIM + 1):
                if self.labels[n] and len(self.labels[n]) != self._counts[n]:
                    problems.append(f'{len(self.labels[n])} labels for {self._counts[n]} {CELL_NAMES[n]}')
        if problems:
            raise StructuralError('Invalid Δ-complex', problems)
        for n in range(2, MAX_DIM + 1):
            lower = self._faces[n - 1]
            for k, cell in enumerate(self._faces[n]):
                for i, j in itertools.combinations(range(n + 1), 2):
                    if lower[cell[j]][i] != lower[cell[i]][j - 1]:
                        problems.append(f'{CELL_NAMES[n]}[{k}]: face {i} of face {j} differs from '
                                        f'face {j - 1} of face {i}')
        if problems:
            raise StructuralError('Simplicial identities do not hold', problems)

    @classmethod
    def from_simplices(cls, simplices: Iterable[Sequence[Hashable]]) -> 'DeltaComplex':
        """Builds the Δ-complex of the simplicial complex generated by the given simplices.

        Vertices of each simplex are sorted, so the face i of a simplex drops its i-th smallest vertex.
        Vertex labels are the given vertex names in sorted order.
        """
        closure: List[set] = [set() for _ in range(MAX_DIM + 1)]
        for simplex in simplices:
            simplex = tuple(sorted(simplex))
            if len(set(simplex)) != len(simplex) or not 1 <= len(simplex) <= MAX_DIM + 1:
                raise StructuralError('Invalid simplex', [str(simplex)])
            for n in range(len(simplex)):
                closure[n].update(itertools.combinations(simplex, n + 1))
        ordered = [sorted(cells) for cells in closure]
        positions = [index_map(cells) for cells in ordered]
        faces = [[tuple(positions[n - 1][s[:i] + s[i + 1:]] for i in range(n + 1)) for s in ordered[n]]
                 for n in range(1, MAX_DIM + 1)]
        return cls(len(ordered[0]), *faces, labels=[[s[0] for s in ordered[0]]])

    @property
    def dim(self) -> int:
        """Highest dimension with a cell, -1 for the empty complex."""
        return max((n for n in range(MAX_DIM + 1) if self._counts[n]), default=-1)

    def count(self, n: int) -> int:
        return self._counts[n] if 0 <= n <= MAX_DIM else 0

    def f_vector(self) -> Tuple[int, ...]:
        return self._counts[:self.dim + 1]

    def faces(self, n: int, cell: int) -> Tuple[int, ...]:
        """Face indices of an n-cell, n >= 1."""
        return self._faces[n][cell]

    def cells(self, n: int) -> Tuple[Tuple[int, ...], ...]:
        if n == 0:
            return tuple(() for _ in range(self._counts[0]))
        return self._faces[n]

    def vertices_of(self, n: int, cell: int) -> Tuple[int, ...]:
        """Ordered vertices of an n-cell: the vertices of its last face followed by the last vertex of face 0."""
        if self._vertices is None:
            table = [[(v,) for v in range(self._counts[0])]]
            table.append([(c[1], c[0]) for c in self._faces[1]])
            for m in range(2, MAX_DIM + 1):
                table.append([table[m - 1][c[m]] + (table[m - 1][c[0]][-1],) for c in self._faces[m]])
            self._vertices = table
        return self._vertices[n][cell]

    def sub_face(self, n: int, cell: int, positions: Iterable[int]) -> int:
        """Index of the face of an n-cell obtained by dropping the vertices at the given positions."""
        for p in sorted(set(positions), reverse=True):
            cell = self._faces[n][cell][p]
            n -= 1
        return cell

    def cofaces(self, n: int, cell: int) -> List[Tuple[int, int]]:
        """The (n+1)-cells having the n-cell as a face, as (coface, position) pairs with multiplicity."""
        if n not in self._cofaces:
            table = [[] for _ in range(self.count(n))]
            for k, c in enumerate(self._faces[n + 1] if n < MAX_DIM else ()):
                for i, f in enumerate(c):
                    table[f].append((k, i))
            self._cofaces[n] = table
        return self._cofaces[n][cell]

    def boundary(self, n: int) -> IntMatrix:
        """The boundary matrix ∂_n: C_n -> C_{n-1} with ∂σ = Σ (-1)^i face_i σ."""
        rows = np.zeros((self.count(n - 1), self.count(n)), dtype=object)
        if 1 <= n <= MAX_DIM:
            for k, cell in enumerate(self._faces[n]):
                for i, f in enumerate(cell):
                    rows[f, k] += (-1) ** i
        return IntMatrix._wrap(rows)

    def chain_complex(self) -> ChainComplex:
        top = max(self.dim, 0)
        return ChainComplex({n: self.count(n) for n in range(top + 1)},
                            {n: self.boundary(n) for n in range(1, top + 1)})

    def components(self) -> Tuple[int, np.ndarray]:
        """Number of connected components and the component label of every vertex."""
        edges = self._faces[1]
        graph = csr_matrix((np.ones(len(edges)), ([e[0] for e in edges], [e[1] for e in edges])),
                           shape=(self._counts[0], self._counts[0]))
        return connected_components(graph, directed=False)

    def is_connected(self) -> bool:
        return self._counts[0] > 0 and self.components()[0] == 1

    def is_simplicial(self) -> bool:
        """Whether every cell has distinct vertices and no two cells of a dimension share their vertex set."""
        for n in range(1, self.dim + 1):
            seen = set()
            for k in range(self._counts[n]):
                vertices = self.vertices_of(n, k)
                key = frozenset(vertices)
                if len(key) != len(vertices) or key in seen:
                    return False
                seen.add(key)
        return True

    def relabel(self, permutations: Sequence[Sequence[int]]) -> 'DeltaComplex':
        """Renumbers cells, permutations[n][old] being the new index of the n-cell old.

        Face order within a cell is kept, so the result is isomorphic to self.
        """
        permutations = list(permutations) + [list(range(self.count(n))) for n in range(len(permutations),
                                                                                     MAX_DIM + 1)]
        faces = []
        for n in range(1, MAX_DIM + 1):
            cells = [None] * self._counts[n]
            for old, cell in enumerate(self._faces[n]):
                cells[permutations[n][old]] = tuple(permutations[n - 1][f] for f in cell)
            faces.append(cells)
        labels = None
        if self.labels is not None:
            labels = []
            for n in range(MAX_DIM + 1):
                relabeled = [None] * len(self.labels[n])
                for old, x in enumerate(self.labels[n]):
                    relabeled[permutations[n][old]] = x
                labels.append(relabeled)
        return DeltaComplex(self._counts[0], *faces, labels=labels)

    def to_dict(self) -> dict:
        data = {'vertices': self._counts[0]}
        for n in range(1, self.dim + 1):
            data[CELL_NAMES[n]] = [list(c) for c in self._faces[n]]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> 'DeltaComplex':
        return cls(data['vertices'], *(data.get(CELL_NAMES[n], ()) for n in range(1, MAX_DIM + 1)))

    def __eq__(self, other):
        return isinstance(other, DeltaComplex) and self._counts == other._counts and self._faces == other._faces

    def __hash__(self):
        return hash(self._faces)

    def __repr__(self):
        return f'DeltaComplex(f_vector={self.f_vector()})'


def euler_characteristic(g: DeltaComplex) -> int:
    """Alternating sum of the cell counts."""
    return sum((-1) ** n * g.count(n) for n in range(MAX_DIM + 1))


def homology(g: DeltaComplex, field_char: int = 0) -> List[int]:
    """Betti numbers (b_0, ..., b_dim) over Q or F_p."""
    dims = homology_dims(g.chain_complex(), field_char)
    return [dims[n] for n in range(max(g.dim, 0) + 1)]


def integer_homology(g: DeltaComplex) -> List[IntegerHomology]:
    """Integral homology groups (H_0, ..., H_dim)."""
    groups = _integer_homology(g.chain_complex())
    return [groups[n] for n in range(max(g.dim, 0) + 1)]
