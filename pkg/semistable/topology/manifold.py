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


__all__ = ['HomologySphereReport', 'ManifoldVerdict', 'check_closed_3_manifold', 'is_homology_3_sphere']

import logging
from typing import NamedTuple, Optional, Tuple

from semistable.constants import SurfaceTag
from semistable.errors import PreconditionError
from semistable.linalg import IntegerHomology
from semistable.topology.delta import DeltaComplex, integer_homology
from semistable.topology.link import edge_link, is_circle, vertex_link
from semistable.topology.surface import classify_surface

logger = logging.getLogger(__name__)

SIMPLE_CONNECTIVITY_CAVEAT = 'homology sphere only; simple connectedness is not certified'


class ManifoldVerdict(NamedTuple):
    """Outcome of the closed 3-manifold check; cell is (dimension, index) of the first offending cell."""
    ok: bool
    clause: str = ''
    cell: Optional[Tuple[int, int]] = None
    message: str = ''


class HomologySphereReport(NamedTuple):
    is_sphere: bool
    homology: Tuple[IntegerHomology, ...]
    caveat: str = SIMPLE_CONNECTIVITY_CAVEAT

    @property
    def h1(self) -> IntegerHomology:
        return self.homology[1]


def check_closed_3_manifold(g: DeltaComplex) -> ManifoldVerdict:
    """Checks that g is a connected closed combinatorial 3-manifold.

    Every triangle must lie in exactly two tetrahedra, every edge link must be a circle and every vertex link
    must be a 2-sphere.
    """
    if g.dim != 3:
        return ManifoldVerdict(False, 'dimension', None, f'dimension is {g.dim}, expected 3')
    for t in range(g.count(2)):
        if len(g.cofaces(2, t)) != 2:
            return ManifoldVerdict(False, 'triangle-cofaces', (2, t),
                                   f'triangle {t} lies in {len(g.cofaces(2, t))} tetrahedra')
    for e in range(g.count(1)):
        if not is_circle(edge_link(g, e)):
            return ManifoldVerdict(False, 'edge-link', (1, e), f'link of edge {e} is not a circle')
    for v in range(g.count(0)):
        surface = classify_surface(vertex_link(g, v))
        if surface.tag != SurfaceTag.SPHERE:
            return ManifoldVerdict(False, 'vertex-link', (0, v), f'link of vertex {v} is {surface}')
    if not g.is_connected():
        return ManifoldVerdict(False, 'connected', None, 'complex is not connected')
    logger.debug('Closed 3-manifold with f-vector %s', g.f_vector())
    return ManifoldVerdict(True)


def is_homology_3_sphere(g: DeltaComplex) -> HomologySphereReport:
    """Whether the integral homology of a closed 3-manifold is (Z, 0, 0, Z).

    Raises:
        PreconditionError: if g is not a closed 3-manifold.
    """
    verdict = check_closed_3_manifold(g)
    if not verdict.ok:
        raise PreconditionError(f'Not a closed 3-manifold: {verdict.message}', verdict.clause)
    groups = tuple(integer_homology(g))
    expected = (IntegerHomology(1), IntegerHomology(0), IntegerHomology(0), IntegerHomology(1))
    return HomologySphereReport(groups == expected, groups)
