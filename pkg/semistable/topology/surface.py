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


__all__ = ['SurfaceClass', 'classify_surface', 'closed_surface_problems']

from typing import List, NamedTuple, Optional

from semistable.constants import SurfaceTag
from semistable.linalg import rank
from semistable.topology.delta import DeltaComplex, euler_characteristic
from semistable.topology.link import is_circle, vertex_link


class SurfaceClass(NamedTuple):
    """Topological type of a Δ-complex; genus is g for orientable and k for nonorientable surfaces."""
    tag: SurfaceTag
    genus: Optional[int] = None
    diagnostic: str = ''

    @property
    def is_closed_surface(self) -> bool:
        return self.tag != SurfaceTag.NOT_A_CLOSED_SURFACE

    @property
    def orientable(self) -> Optional[bool]:
        if not self.is_closed_surface:
            return None
        return self.tag in (SurfaceTag.SPHERE, SurfaceTag.TORUS, SurfaceTag.ORIENTABLE_GENUS)

    def __str__(self):
        if self.tag in (SurfaceTag.ORIENTABLE_GENUS, SurfaceTag.NONORIENTABLE_GENUS):
            return f'{self.tag.value}({self.genus})'
        if not self.is_closed_surface:
            return f'{self.tag.value}: {self.diagnostic}'
        return self.tag.value


def closed_surface_problems(g: DeltaComplex) -> List[str]:
    """Reasons why g is not a connected closed surface, empty if it is one."""
    if g.dim != 2:
        return [f'dimension is {g.dim}, expected 2']
    problems = []
    for e in range(g.count(1)):
        if len(g.cofaces(1, e)) != 2:
            problems.append(f'edge {e} lies in {len(g.cofaces(1, e))} triangles')
    if problems:
        return problems
    for v in range(g.count(0)):
        if not is_circle(vertex_link(g, v)):
            problems.append(f'link of vertex {v} is not a circle')
    if not problems and not g.is_connected():
        problems.append('complex is not connected')
    return problems


def classify_surface(g: DeltaComplex) -> SurfaceClass:
    """Classifies a Δ-complex as a closed surface by orientability and Euler characteristic.

    Returns:
        The SurfaceClass; NotAClosedSurface carries the first failed condition as diagnostic.
    """
    problems = closed_surface_problems(g)
    if problems:
        return SurfaceClass(SurfaceTag.NOT_A_CLOSED_SURFACE, diagnostic=problems[0])
    chi = euler_characteristic(g)
    # A connected closed surface is orientable iff its top boundary map has a one dimensional kernel.
    if g.count(2) - rank(g.boundary(2)) == 1:
        genus = (2 - chi) // 2
        tag = {0: SurfaceTag.SPHERE, 1: SurfaceTag.TORUS}.get(genus, SurfaceTag.ORIENTABLE_GENUS)
        return SurfaceClass(tag, genus)
    k = 2 - chi
    tag = {1: SurfaceTag.REAL_PROJECTIVE_PLANE, 2: SurfaceTag.KLEIN_BOTTLE}.get(k, SurfaceTag.NONORIENTABLE_GENUS)
    return SurfaceClass(tag, k)
