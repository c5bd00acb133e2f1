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


"""Combinatorial Calabi-Yau threefold degenerations of Type IV."""

__all__ = ['AnticanonicalVerdict', 'Component3', 'Configuration3', 'CubeVerdict', 'CY4Verdict', 'DoubleSurface',
           'LinkVerdict', 'MaximalIntersection', 'QuadruplePoint', 'TripleCurve', 'boundary_complex',
           'check_anticanonical_connectedness', 'check_maximal_intersection', 'check_structure3',
           'check_vertex_links', 'classify_cy4', 'cube_verdict', 'dual_complex', 'e2_30']

import collections
import itertools
import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple

from semistable.constants import DegenerationType
from semistable.errors import PreconditionError, StructuralError
from semistable.sncl import Clause
from semistable.topology import (DeltaComplex, HomologySphereReport, check_closed_3_manifold, homology,
                                 is_homology_3_sphere, vertex_link)
from semistable.topology.manifold import SIMPLE_CONNECTIVITY_CAVEAT
from semistable.util import duplicates, index_map

logger = logging.getLogger(__name__)


class Component3(NamedTuple):
    id: str
    mori_fibre_birational: bool = True
    base_unirational: bool = True


class DoubleSurface(NamedTuple):
    """A connected component of V_i ∩ V_j."""
    id: str
    components: Tuple[str, str]
    rational: bool = True


class TripleCurve(NamedTuple):
    """A connected component of V_i ∩ V_j ∩ V_k, lying on three double surfaces."""
    id: str
    surfaces: Tuple[str, str, str]
    components: Tuple[str, str, str]
    rational: bool = True


class QuadruplePoint(NamedTuple):
    id: str
    curves: Tuple[str, str, str, str]
    components: Tuple[str, str, str, str]


class Configuration3:
    """Combinatorial special fibre of a semistable degeneration of threefolds."""

    def __init__(self, components: Sequence[Component3], double_surfaces: Sequence[DoubleSurface] = (),
                 triple_curves: Sequence[TripleCurve] = (), quadruple_points: Sequence[QuadruplePoint] = (), *,
                 wmc_assumed: bool = True, name: str = ''):
        self.components = tuple(components)
        self.double_surfaces = tuple(double_surfaces)
        self.triple_curves = tuple(triple_curves)
        self.quadruple_points = tuple(quadruple_points)
        self.wmc_assumed = wmc_assumed
        self.name = name

    def replace(self, **kwargs) -> 'Configuration3':
        args = dict(components=self.components, double_surfaces=self.double_surfaces,
                    triple_curves=self.triple_curves, quadruple_points=self.quadruple_points,
                    wmc_assumed=self.wmc_assumed, name=self.name)
        args.update(kwargs)
        return Configuration3(**args)

    def _key(self):
        return (self.components, self.double_surfaces, self.triple_curves, self.quadruple_points, self.wmc_assumed,
                self.name)

    def __eq__(self, other):
        return isinstance(other, Configuration3) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f'Configuration3(name={self.name!r}, components={len(self.components)}, '
                f'double_surfaces={len(self.double_surfaces)}, triple_curves={len(self.triple_curves)}, '
                f'quadruple_points={len(self.quadruple_points)})')


def check_structure3(c: Configuration3):
    """Checks referential integrity of a threefold configuration.

    Raises:
        StructuralError: listing every problem found.
    """
    problems = []
    for kind, items in (('component', c.components), ('double surface', c.double_surfaces),
                        ('triple curve', c.triple_curves), ('quadruple point', c.quadruple_points)):
        problems += [f'duplicate {kind} id {x!r}' for x in duplicates(x.id for x in items)]
    ids = {x.id for x in c.components}
    surfaces = {x.id: x for x in c.double_surfaces}
    curves = {x.id: x for x in c.triple_curves}
    for s in c.double_surfaces:
        if len(set(s.components)) != 2 or not set(s.components) <= ids:
            problems.append(f'double surface {s.id}: needs two distinct known components')
    for t in c.triple_curves:
        if len(set(t.components)) != 3 or not set(t.components) <= ids or not set(t.surfaces) <= set(surfaces):
            problems.append(f'triple curve {t.id}: needs three distinct known components and known surfaces')
            continue
        pairs = {frozenset(surfaces[x].components) for x in t.surfaces}
        if pairs != {frozenset(p) for p in itertools.combinations(t.components, 2)}:
            problems.append(f'triple curve {t.id}: surfaces do not join the pairs of its components')
    for q in c.quadruple_points:
        if len(set(q.components)) != 4 or not set(q.components) <= ids or not set(q.curves) <= set(curves):
            problems.append(f'quadruple point {q.id}: needs four distinct known components and known curves')
            continue
        triples = {frozenset(curves[x].components) for x in q.curves}
        if triples != {frozenset(p) for p in itertools.combinations(q.components, 3)}:
            problems.append(f'quadruple point {q.id}: curves do not match the triples of its components')
    if problems:
        raise StructuralError(f'Inconsistent threefold configuration {c.name}'.strip(), problems)


def _ordered_complex(vertex_ids: Sequence[str], edges: Sequence[Tuple[str, Sequence[str]]],
                     triangles: Sequence[Tuple[str, Sequence[str], Sequence[str]]],
                     tetrahedra: Sequence[Tuple[str, Sequence[str], Sequence[str]]]) -> DeltaComplex:
    """Δ-complex whose cells have their vertices ordered by vertex position.

    edges are (id, vertex ids); triangles and tetrahedra are (id, vertex ids, face ids), each face being
    identified by the vertices it spans.
    """
    position = index_map(vertex_ids)
    edge_position = index_map(x[0] for x in edges)
    triangle_position = index_map(x[0] for x in triangles)
    edge_cells = []
    for _, ends in edges:
        start, end = sorted(position[x] for x in ends)
        edge_cells.append((end, start))
    edge_vertices = {x[0]: frozenset(position[y] for y in x[1]) for x in edges}
    triangle_vertices = {x[0]: frozenset(position[y] for y in x[1]) for x in triangles}

    def faces(vertices, face_ids, lookup, face_position):
        ordered = sorted(position[x] for x in vertices)
        by_span = {lookup[f]: face_position[f] for f in face_ids}
        return tuple(by_span[frozenset(ordered[:i] + ordered[i + 1:])] for i in range(len(ordered)))

    triangle_cells = [faces(v, f, edge_vertices, edge_position) for _, v, f in triangles]
    tetrahedron_cells = [faces(v, f, triangle_vertices, triangle_position) for _, v, f in tetrahedra]
    labels = [list(vertex_ids), [x[0] for x in edges], [x[0] for x in triangles], [x[0] for x in tetrahedra]]
    return DeltaComplex(len(vertex_ids), edge_cells, triangle_cells, tetrahedron_cells, labels=labels)


def dual_complex(c: Configuration3) -> DeltaComplex:
    """Γ with a vertex per component, an edge per double surface, a triangle per triple curve and a tetrahedron
    per quadruple point.

    Raises:
        StructuralError: on inconsistent incidences.
    """
    check_structure3(c)
    return _ordered_complex([x.id for x in c.components],
                            [(x.id, x.components) for x in c.double_surfaces],
                            [(x.id, x.components, x.surfaces) for x in c.triple_curves],
                            [(x.id, x.components, x.curves) for x in c.quadruple_points])


def boundary_complex(c: Configuration3, component: str) -> DeltaComplex:
    """Dual complex of the boundary divisor D_i of a component: a vertex per double surface on it, an edge per
    triple curve and a triangle per quadruple point, vertices ordered by the position of the other component."""
    position = index_map(x.id for x in c.components)
    surfaces = [x for x in c.double_surfaces if component in x.components]
    order = sorted(surfaces, key=lambda x: position[next(y for y in x.components if y != component)])
    curves = [x for x in c.triple_curves if component in x.components]
    points = [x for x in c.quadruple_points if component in x.components]
    surface_of = {x.id: x for x in c.double_surfaces}
    curve_of = {x.id: x for x in c.triple_curves}
    edges = [(x.id, [y for y in x.surfaces if component in surface_of[y].components]) for x in curves]
    triangles = [(x.id, [y for y in x.curves if component in curve_of[y].components]) for x in points]
    # Vertex i spans the double surface i; cells are identified by the double surfaces they meet.
    spans = {x.id: [x.id] for x in order}
    spans.update({x: s for x, s in edges})
    return _ordered_complex([x.id for x in order], edges,
                            [(x, sorted({s for y in f for s in spans[y]}), f) for x, f in triangles], [])


class MaximalIntersection(NamedTuple):
    exists: bool
    every_component: bool
    missing: Tuple[str, ...]


def check_maximal_intersection(c: Configuration3) -> MaximalIntersection:
    """Whether a quadruple point exists, and whether every component contains one."""
    touched = {x for q in c.quadruple_points for x in q.components}
    missing = tuple(x.id for x in c.components if x.id not in touched)
    return MaximalIntersection(bool(c.quadruple_points), not missing, missing)


class AnticanonicalVerdict(NamedTuple):
    component: str
    pieces: int
    ok: bool
    message: str = ''


def check_anticanonical_connectedness(c: Configuration3) -> Tuple[AnticanonicalVerdict, ...]:
    """The boundary divisor of every component is connected, or has two irreducible connected components."""
    verdicts = []
    for x in c.components:
        d = boundary_complex(c, x.id)
        if d.count(0) == 0:
            verdicts.append(AnticanonicalVerdict(x.id, 0, False, 'boundary divisor is empty'))
            continue
        pieces, labels = d.components()
        sizes = collections.Counter(labels.tolist())
        if pieces == 1:
            verdicts.append(AnticanonicalVerdict(x.id, 1, True))
        elif pieces == 2 and all(n == 1 for n in sizes.values()):
            verdicts.append(AnticanonicalVerdict(x.id, 2, True, 'two disjoint irreducible pieces'))
        elif pieces == 2:
            verdicts.append(AnticanonicalVerdict(x.id, 2, False, 'a piece of the boundary divisor is reducible'))
        else:
            verdicts.append(AnticanonicalVerdict(x.id, pieces, False, f'boundary divisor has {pieces} pieces'))
    return tuple(verdicts)


class LinkVerdict(NamedTuple):
    component: str
    ok: bool


def _labeled_cells(g: DeltaComplex, label) -> List[collections.Counter]:
    return [collections.Counter((label(n, k), tuple(sorted(label(n - 1, f) for f in g.faces(n, k))) if n else ())
                                for k in range(g.count(n))) for n in range(3)]


def check_vertex_links(c: Configuration3) -> Tuple[LinkVerdict, ...]:
    """Compares the link of every vertex of Γ with the dual complex of the component's boundary divisor."""
    gamma = dual_complex(c)
    verdicts = []
    for v, x in enumerate(c.components):
        link = vertex_link(gamma, v)
        boundary = boundary_complex(c, x.id)
        link_cells = _labeled_cells(link, lambda n, k: gamma.labels[n + 1][link.labels[n][k][0]])
        boundary_cells = _labeled_cells(boundary, lambda n, k: boundary.labels[n][k])
        verdicts.append(LinkVerdict(x.id, link_cells == boundary_cells))
    return tuple(verdicts)


class CY4Verdict(NamedTuple):
    """Type IV verdict; type is None for a rejection. simplicial tells whether Γ is a simplicial complex."""
    type: Optional[DegenerationType]
    clauses: Tuple[Clause, ...]
    sphere: Optional[HomologySphereReport]
    simplicial: bool
    caveat: str = SIMPLE_CONNECTIVITY_CAVEAT

    @property
    def ok(self) -> bool:
        return self.type is not None


def classify_cy4(c: Configuration3) -> CY4Verdict:
    """Checks every clause of a combinatorial Calabi-Yau degeneration of Type IV.

    Components must be birational to Mori fibre spaces over unirational bases, all double surfaces and triple
    curves rational, every component must contain a quadruple point and Γ must be a closed 3-manifold with the
    homology of the 3-sphere.
    """
    gamma = dual_complex(c)
    bad = [x.id for x in c.components if not (x.mori_fibre_birational and x.base_unirational)]
    clauses = [Clause.judge('mori-fibre', not bad, 'every component carries the Mori fibre space flags',
                            f'components {bad} lack the Mori fibre space flags')]
    irrational = [x.id for x in c.double_surfaces + c.triple_curves if not x.rational]
    clauses.append(Clause.judge('rational-strata', not irrational, 'double surfaces and triple curves are rational',
                                f'strata {irrational} are not rational'))
    intersection = check_maximal_intersection(c)
    clauses.append(Clause.judge('maximal-intersection', intersection.every_component,
                                'every component contains a quadruple point',
                                f'components {list(intersection.missing)} contain no quadruple point'))
    manifold = check_closed_3_manifold(gamma)
    clauses.append(Clause.judge('closed-3-manifold', manifold.ok, 'Γ is a closed 3-manifold', manifold.message))
    sphere = None
    if manifold.ok:
        sphere = is_homology_3_sphere(gamma)
        clauses.append(Clause('homology-sphere', sphere.is_sphere,
                              'H_* = ' + ', '.join(str(x) for x in sphere.homology)))
    ok = all(x.ok for x in clauses)
    logger.debug('%s: Type IV %s', c.name, 'accepted' if ok else 'rejected')
    return CY4Verdict(DegenerationType.IV if ok else None, tuple(clauses), sphere, gamma.is_simplicial())


def e2_30(c: Configuration3) -> int:
    """dim E_2^{3,0} = dim H^3(Γ; Q).

    Raises:
        PreconditionError: if Γ is not a closed 3-manifold.
    """
    gamma = dual_complex(c)
    manifold = check_closed_3_manifold(gamma)
    if not manifold.ok:
        raise PreconditionError(f'Dual complex is not a closed 3-manifold: {manifold.message}', manifold.clause)
    return homology(gamma)[3]


class CubeVerdict(NamedTuple):
    """N^3 ≠ 0 follows from E_2^{3,0} ≠ 0 only under the weight monodromy assumption; None means undecided."""
    e2_30: int
    wmc_assumed: bool
    n3_nonzero: Optional[bool]


def cube_verdict(c: Configuration3, wmc_assumed: Optional[bool] = None) -> CubeVerdict:
    wmc = c.wmc_assumed if wmc_assumed is None else wmc_assumed
    dim = e2_30(c)
    return CubeVerdict(dim, wmc, (dim != 0) if wmc else None)
