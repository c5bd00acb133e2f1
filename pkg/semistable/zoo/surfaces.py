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


"""Combinatorial surface degenerations of Type I, II and III, with the canonical covers of the non simply
connected classes."""

__all__ = ['abelian_chain', 'abelian_csaszar', 'abelian_cycle', 'abelian_torus_grid', 'bielliptic_chain',
           'bielliptic_chain_cover', 'bielliptic_cycle', 'bielliptic_cycle_cover', 'bielliptic_klein',
           'bielliptic_klein_cover', 'enriques_chain', 'enriques_chain_cover', 'enriques_rp2', 'enriques_rp2_cover',
           'icosahedron', 'k3_chain', 'k3_icosahedron', 'k3_tetrahedron', 'smooth', 'smooth_cover', 'torus_grid']

import itertools
from typing import Dict, List, Sequence, Tuple

from semistable.constants import ComponentTag, CoverBehavior, CurveRole
from semistable.covers import CoverMap, CoverSheet
from semistable.errors import PreconditionError
from semistable.sncl import Component, Configuration, DoubleCurve, Side, TransferOverride
from semistable.zoo.quotient import Triangle, free_quotient, triangulated

RATIONAL_END_B2 = 10
ELLIPTIC_RULED_B2 = 2
# Canonical cover of each non simply connected class.
COVERING_CLASS = {ComponentTag.ENRIQUES: ComponentTag.K3, ComponentTag.BIELLIPTIC: ComponentTag.ABELIAN}
# Gluing monodromy of a bielliptic cycle acting on H^1 of the closing double curve.
TWIST_BETTI = ((-1, 0), (0, -1))
TWIST_COHERENT = ((-1,),)


def _check_length(n: int, least: int, what: str):
    if n < least:
        raise PreconditionError(f'A {what} needs at least {least} components, got {n}', [what])


def _elliptic_ruled(p: int) -> Component:
    return Component.of(f'Y{p}', ComponentTag.ELLIPTIC_RULED, ELLIPTIC_RULED_B2)


def _rational(p: int, b2: int = RATIONAL_END_B2) -> Component:
    return Component.of(f'Y{p}', ComponentTag.RATIONAL, b2)


def _role(x: Component, degree: int) -> CurveRole:
    if x.tag == ComponentTag.RATIONAL:
        return CurveRole.ELLIPTIC_ON_RATIONAL
    return CurveRole.RULING if degree == 2 else CurveRole.TWO_RULING


def _glue(surface_class: ComponentTag, components: Sequence[Component], closed: bool, **kwargs) -> Configuration:
    """Glues components along elliptic double curves C_p = Y_p ∩ Y_{p+1}, closing the string when closed."""
    n = len(components)
    pairs = [(p, (p + 1) % n) for p in range(n if closed else n - 1)]
    degree: Dict[int, int] = {p: 0 for p in range(n)}
    for a, b in pairs:
        degree[a] += 1
        degree[b] += 1
    curves = [DoubleCurve(f'C{p}', 1, Side(components[a].id, _role(components[a], degree[a])),
                          Side(components[b].id, _role(components[b], degree[b])))
              for p, (a, b) in enumerate(pairs)]
    return Configuration(surface_class, components, curves, **kwargs)


def smooth(surface_class: ComponentTag) -> Configuration:
    """Type I: the special fibre is a smooth surface of the same class."""
    return Configuration(surface_class, [Component.of('Y0', surface_class)],
                         name=f'{surface_class.value.lower()}_smooth')


def k3_chain(n: int) -> Configuration:
    """Type II K3: rational ends joined by a chain of n - 2 elliptic ruled surfaces."""
    _check_length(n, 2, 'K3 chain')
    components = [_rational(0)] + [_elliptic_ruled(p) for p in range(1, n - 1)] + [_rational(n - 1)]
    return _glue(ComponentTag.K3, components, closed=False, name=f'k3_chain_{n}')


def enriques_chain(n: int) -> Configuration:
    """Type II Enriques: a rational end, then elliptic ruled surfaces ending on a 2-ruling."""
    _check_length(n, 2, 'Enriques chain')
    components = [_rational(0)] + [_elliptic_ruled(p) for p in range(1, n)]
    return _glue(ComponentTag.ENRIQUES, components, closed=False, name=f'enriques_chain_{n}')


def abelian_cycle(n: int) -> Configuration:
    """Type II abelian: a cycle of n elliptic ruled surfaces."""
    _check_length(n, 2, 'abelian cycle')
    return _glue(ComponentTag.ABELIAN, [_elliptic_ruled(p) for p in range(n)], closed=True,
                 name=f'abelian_cycle_{n}')


def abelian_chain(n: int) -> Configuration:
    """A chain of elliptic ruled surfaces declared abelian; it never is the special fibre of an abelian surface."""
    _check_length(n, 2, 'abelian chain')
    return _glue(ComponentTag.ABELIAN, [_elliptic_ruled(p) for p in range(n)], closed=False,
                 name=f'abelian_chain_{n}')


def bielliptic_cycle(n: int) -> Configuration:
    """Type II bielliptic cycle; the closing curve is glued with a twist of order two."""
    _check_length(n, 2, 'bielliptic cycle')
    twist = TransferOverride('Y0', f'C{n - 1}', TWIST_BETTI, TWIST_COHERENT)
    return _glue(ComponentTag.BIELLIPTIC, [_elliptic_ruled(p) for p in range(n)], closed=True, transfers=[twist],
                 name=f'bielliptic_cycle_{n}')


def bielliptic_chain(n: int) -> Configuration:
    """Type II bielliptic chain: elliptic ruled surfaces with a 2-ruling at both ends."""
    _check_length(n, 2, 'bielliptic chain')
    return _glue(ComponentTag.BIELLIPTIC, [_elliptic_ruled(p) for p in range(n)], closed=False,
                 name=f'bielliptic_chain_{n}')


def _tetrahedron() -> List[Triangle]:
    return list(itertools.combinations(range(4), 3))


def icosahedron() -> Tuple[List[Triangle], Dict[int, int]]:
    """Triangles of the icosahedron and its antipodal map.

    Vertex 0 is the top, 1..5 the upper pentagon u_k, 6..10 the lower pentagon l_k and 11 the bottom.
    """
    u = [1 + k for k in range(5)]
    lo = [6 + k for k in range(5)]
    triangles = []
    for k in range(5):
        k1 = (k + 1) % 5
        triangles += [(0, u[k], u[k1]), (u[k], lo[k], u[k1]), (u[k1], lo[k], lo[k1]), (11, lo[k], lo[k1])]
    antipode = {0: 11, 11: 0}
    for k in range(5):
        antipode[u[k]] = lo[(k + 2) % 5]
        antipode[lo[k]] = u[(k + 3) % 5]
    return triangles, antipode


def torus_grid(width: int = 6, height: int = 4) -> Tuple[List[Triangle], Dict[int, int]]:
    """Triangles of a width x height grid on the torus and a free involution with a Klein bottle quotient.

    Vertex (i, j) is numbered height * i + j. Squares of the lower half of the rows are cut along one diagonal
    and those of the upper half along the other, so that (i, j) -> (i + width / 2, -j) is simplicial.
    """
    if width % 2 or height % 2 or width < 6 or height < 4:
        raise PreconditionError('Torus grid needs an even width >= 6 and an even height >= 4', [(width, height)])

    def v(i: int, j: int) -> int:
        return height * (i % width) + j % height

    triangles = []
    for i, j in itertools.product(range(width), range(height)):
        a, b, c, d = v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)
        if j < height // 2:
            triangles += [(a, b, d), (a, c, d)]
        else:
            triangles += [(a, b, c), (b, c, d)]
    flip = {v(i, j): v(i + width // 2, -j) for i, j in itertools.product(range(width), range(height))}
    return triangles, flip


def k3_tetrahedron() -> Configuration:
    """Type III K3 on the boundary of a tetrahedron."""
    return triangulated(ComponentTag.K3, _tetrahedron(), b2=7, name='k3_tetrahedron')


def k3_icosahedron() -> Configuration:
    """Type III K3 on the icosahedron, the canonical cover of enriques_rp2."""
    return triangulated(ComponentTag.K3, icosahedron()[0], b2=5, name='k3_icosahedron')


def abelian_csaszar() -> Configuration:
    """Type III abelian on the seven vertex torus."""
    triangles = [t for i in range(7) for t in ((i, (i + 1) % 7, (i + 3) % 7), (i, (i + 2) % 7, (i + 3) % 7))]
    return triangulated(ComponentTag.ABELIAN, triangles, b2=4, name='abelian_csaszar')


def abelian_torus_grid() -> Configuration:
    """Type III abelian on a 6 x 4 torus grid, the canonical cover of bielliptic_klein."""
    return triangulated(ComponentTag.ABELIAN, torus_grid()[0], b2=4, name='abelian_torus_grid')


def smooth_cover(surface_class: ComponentTag) -> CoverMap:
    """Canonical double cover of a smooth Enriques or bielliptic special fibre."""
    total = smooth(COVERING_CLASS[surface_class])
    return CoverMap(2, total, smooth(surface_class), {'Y0': CoverSheet('Y0', CoverBehavior.IRREDUCIBLE_COVER, 2)},
                    {})


def _folded_cover(total: Configuration, base: Configuration, folds: Sequence[int]) -> CoverMap:
    """Double cover folding a string of 2n - 1 (or a cycle of 2n - 2) components onto a chain of n.

    Component p maps to p or 2n - 2 - p; the fold components listed in folds cover their image irreducibly.
    """
    n = len(base.components)
    sheets = {}
    for p, x in enumerate(total.components):
        q = p if p < n else 2 * n - 2 - p
        if p in folds:
            sheets[x.id] = CoverSheet(f'Y{q}', CoverBehavior.IRREDUCIBLE_COVER, 2)
        else:
            sheets[x.id] = CoverSheet(f'Y{q}', CoverBehavior.SPLIT_COPIES)
    curves = {x.id: f'C{p if p < n - 1 else 2 * n - 3 - p}' for p, x in enumerate(total.double_curves)}
    return CoverMap(2, total, base, sheets, curves)


def enriques_chain_cover(n: int) -> CoverMap:
    """The K3 chain of length 2n - 1 folded onto the Enriques chain of length n."""
    return _folded_cover(k3_chain(2 * n - 1), enriques_chain(n), folds=[n - 1])


def bielliptic_chain_cover(n: int) -> CoverMap:
    """The abelian cycle of length 2n - 2 folded onto the bielliptic chain of length n."""
    return _folded_cover(abelian_cycle(2 * n - 2), bielliptic_chain(n), folds=[0, n - 1])


def bielliptic_cycle_cover(n: int) -> CoverMap:
    """The abelian cycle of length 2n wound twice around the bielliptic cycle of length n."""
    total = abelian_cycle(2 * n)
    return CoverMap(2, total, bielliptic_cycle(n),
                    {f'Y{p}': CoverSheet(f'Y{p % n}', CoverBehavior.SPLIT_COPIES) for p in range(2 * n)},
                    {f'C{p}': f'C{p % n}' for p in range(2 * n)})


def enriques_rp2_cover() -> CoverMap:
    """The icosahedral K3 over its antipodal quotient, an Enriques fibre on the six vertex projective plane."""
    triangles, antipode = icosahedron()
    return free_quotient(triangles, antipode, total_class=ComponentTag.K3, base_class=ComponentTag.ENRIQUES, b2=5,
                         total_name='k3_icosahedron', name='enriques_rp2')


def bielliptic_klein_cover() -> CoverMap:
    """The abelian torus grid over its quotient by a glide reflection, a bielliptic fibre on a Klein bottle."""
    triangles, flip = torus_grid()
    return free_quotient(triangles, flip, total_class=ComponentTag.ABELIAN, base_class=ComponentTag.BIELLIPTIC,
                         b2=4, total_name='abelian_torus_grid', name='bielliptic_klein')


def enriques_rp2() -> Configuration:
    return enriques_rp2_cover().base


def bielliptic_klein() -> Configuration:
    return bielliptic_klein_cover().base
