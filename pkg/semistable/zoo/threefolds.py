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


"""Threefold special fibres whose dual complexes are triangulated 3-manifolds."""

__all__ = ['cy3_simplex_boundary', 'freudenthal_torus', 'three_torus', 'triangulated3']

import itertools
from typing import List, Sequence, Tuple

from semistable.threefold import Component3, Configuration3, DoubleSurface, QuadruplePoint, TripleCurve

Tetrahedron = Tuple[int, int, int, int]


def _name(prefix: str, vertices: Sequence[int]) -> str:
    return prefix + '_'.join(map(str, sorted(vertices)))


def triangulated3(tetrahedra: Sequence[Tetrahedron], name: str = '') -> Configuration3:
    """Configuration with a rational stratum for every simplex of a simplicial 3-complex.

    Vertices are components, edges double surfaces, triangles triple curves and tetrahedra quadruple points.
    """
    tetrahedra = sorted(tuple(sorted(t)) for t in tetrahedra)
    vertices = sorted({v for t in tetrahedra for v in t})
    edges = sorted({e for t in tetrahedra for e in itertools.combinations(t, 2)})
    triangles = sorted({f for t in tetrahedra for f in itertools.combinations(t, 3)})
    return Configuration3([Component3(f'Y{v}') for v in vertices],
                          [DoubleSurface(_name('D', e), tuple(f'Y{v}' for v in e)) for e in edges],
                          [TripleCurve(_name('C', f), tuple(_name('D', e) for e in itertools.combinations(f, 2)),
                                       tuple(f'Y{v}' for v in f)) for f in triangles],
                          [QuadruplePoint(_name('P', t), tuple(_name('C', f) for f in itertools.combinations(t, 3)),
                                          tuple(f'Y{v}' for v in t)) for t in tetrahedra],
                          name=name)


def cy3_simplex_boundary() -> Configuration3:
    """Type IV: five components meeting like the facets of a 4-simplex."""
    return triangulated3(list(itertools.combinations(range(5), 4)), name='cy3_simplex_boundary')


def freudenthal_torus(n: int = 3) -> List[Tetrahedron]:
    """Freudenthal triangulation of the n x n x n cubical 3-torus: six tetrahedra per cube along the main diagonal.

    The triangulation is simplicial for n >= 3.
    """
    def v(x: int, y: int, z: int) -> int:
        return n * n * (x % n) + n * (y % n) + z % n

    tetrahedra = []
    for origin in itertools.product(range(n), repeat=3):
        for axes in itertools.permutations(range(3)):
            corner = list(origin)
            path = [v(*corner)]
            for axis in axes:
                corner[axis] += 1
                path.append(v(*corner))
            tetrahedra.append(tuple(path))
    return tetrahedra


def three_torus(n: int = 3) -> Configuration3:
    """A threefold fibre whose dual complex is a 3-torus; it is not of Type IV."""
    return triangulated3(freudenthal_torus(n), name='three_torus')
