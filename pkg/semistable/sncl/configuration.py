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


__all__ = ['CANONICAL_ORDERS', 'Component', 'ComponentKind', 'Configuration', 'DoubleCurve', 'Side', 'TransferOverride',
           'TriplePoint', 'check_structure']

import collections
from typing import List, NamedTuple, Optional, Sequence, Tuple

from semistable.constants import KODAIRA_ZERO, ComponentTag, CurveRole
from semistable.errors import StructuralError
from semistable.linalg import check_field_char
from semistable.typing import Rows
from semistable.util import duplicates

DEFAULT_BETTI = {
    ComponentTag.K3: (1, 0, 22, 0, 1),
    ComponentTag.ENRIQUES: (1, 0, 10, 0, 1),
    ComponentTag.ABELIAN: (1, 4, 6, 4, 1),
    ComponentTag.BIELLIPTIC: (1, 2, 2, 2, 1),
    ComponentTag.RATIONAL: (1, 0, 1, 0, 1),
    ComponentTag.ELLIPTIC_RULED: (1, 2, 2, 2, 1),
}
DEFAULT_COHERENT = {
    ComponentTag.K3: (1, 0, 1),
    ComponentTag.ENRIQUES: (1, 0, 0),
    ComponentTag.ABELIAN: (1, 2, 1),
    ComponentTag.BIELLIPTIC: (1, 1, 0),
    ComponentTag.RATIONAL: (1, 0, 0),
    ComponentTag.ELLIPTIC_RULED: (1, 1, 0),
}
MIN_B2 = {ComponentTag.RATIONAL: 1, ComponentTag.ELLIPTIC_RULED: 2}
# Smallest m with ω^m ≅ O allowed for each class; the first entry is the default.
CANONICAL_ORDERS = {
    ComponentTag.K3: (1,),
    ComponentTag.ENRIQUES: (2,),
    ComponentTag.ABELIAN: (1,),
    ComponentTag.BIELLIPTIC: (2, 3, 4, 6),
}


class ComponentKind(NamedTuple):
    """Surface kind of a component with its Betti and coherent tables.

    b2 is only meaningful for Rational and EllipticRuled kinds; None means the minimal default.
    """
    tag: ComponentTag
    b2: Optional[int] = None

    @property
    def b2_declared(self) -> bool:
        """Whether b2 is known: fixed by the kind or supplied by the user."""
        return self.tag not in MIN_B2 or self.b2 is not None

    @property
    def betti(self) -> Tuple[int, ...]:
        b0, b1, b2, b3, b4 = DEFAULT_BETTI[self.tag]
        if self.tag in MIN_B2:
            b2 = MIN_B2[self.tag] if self.b2 is None else self.b2
        return b0, b1, b2, b3, b4

    @property
    def coherent(self) -> Tuple[int, ...]:
        return DEFAULT_COHERENT[self.tag]


class Component(NamedTuple):
    id: str
    kind: ComponentKind

    @classmethod
    def of(cls, id: str, tag: ComponentTag, b2: Optional[int] = None) -> 'Component':
        return cls(id, ComponentKind(tag, b2))

    @property
    def tag(self) -> ComponentTag:
        return self.kind.tag


class Side(NamedTuple):
    """One of the two components containing a double curve, with the role the curve plays on it."""
    component: str
    role: CurveRole


class DoubleCurve(NamedTuple):
    id: str
    genus: int
    left: Side
    right: Side
    triple_point_count: int = 0

    @property
    def sides(self) -> Tuple[Side, Side]:
        return self.left, self.right

    @property
    def components(self) -> Tuple[str, str]:
        return self.left.component, self.right.component

    def side_on(self, component: str) -> Side:
        return self.left if self.left.component == component else self.right

    def other(self, component: str) -> str:
        return self.right.component if self.left.component == component else self.left.component


class TriplePoint(NamedTuple):
    id: str
    curves: Tuple[str, str, str]
    components: Tuple[str, str, str]


class TransferOverride(NamedTuple):
    """Replacement transfer maps for the flag component ⊃ curve.

    betti is the matrix H^1(component) -> H^1(curve) and coherent the matrix H^1(O_component) -> H^1(O_curve).
    A None entry keeps the default map.
    """
    component: str
    curve: str
    betti: Optional[Rows] = None
    coherent: Optional[Rows] = None


def _frozen(rows: Optional[Rows]) -> Optional[Tuple[Tuple, ...]]:
    return None if rows is None else tuple(tuple(row) for row in rows)


class Configuration:
    """Combinatorial special fibre Y = Y_1 ∪ ... ∪ Y_N of a semistable degeneration of surfaces."""

    def __init__(self, surface_class: ComponentTag, components: Sequence[Component],
                 double_curves: Sequence[DoubleCurve] = (), triple_points: Sequence[TriplePoint] = (),
                 transfers: Sequence[TransferOverride] = (), *, field_char: int = 0, wmc_assumed: bool = True,
                 canonical_order: Optional[int] = None, name: str = ''):
        """Creates a configuration; referential integrity is checked separately by check_structure.

        Args:
            surface_class: class of the generic fibre.
            components: the irreducible components.
            double_curves: the curves C_ij = Y_i ∩ Y_j.
            triple_points: the points Y_i ∩ Y_j ∩ Y_k.
            transfers: per flag transfer map overrides.
            field_char: characteristic of the coefficient field of coherent computations.
            wmc_assumed: whether the weight monodromy isomorphisms may be assumed.
            canonical_order: smallest m with ω^m ≅ O, the class default when None.
            name: free form name.
        """
        self.surface_class = ComponentTag(surface_class)
        self.components = tuple(components)
        self.double_curves = tuple(double_curves)
        self.triple_points = tuple(triple_points)
        self.transfers = tuple(TransferOverride(t.component, t.curve, _frozen(t.betti), _frozen(t.coherent))
                               for t in transfers)
        self.field_char = field_char
        self.wmc_assumed = wmc_assumed
        orders = CANONICAL_ORDERS.get(self.surface_class, (1,))
        self.canonical_order = orders[0] if canonical_order is None else canonical_order
        self.name = name
        self._components = {x.id: x for x in self.components}
        self._curves = {x.id: x for x in self.double_curves}
        self._points = {x.id: x for x in self.triple_points}

    def component(self, id: str) -> Component:
        return self._components[id]

    def curve(self, id: str) -> DoubleCurve:
        return self._curves[id]

    def triple_point(self, id: str) -> TriplePoint:
        return self._points[id]

    def curves_on(self, component: str) -> List[DoubleCurve]:
        return [c for c in self.double_curves if component in c.components]

    def points_on(self, component: str) -> List[TriplePoint]:
        return [p for p in self.triple_points if component in p.components]

    def points_on_curve(self, curve: str) -> List[TriplePoint]:
        return [p for p in self.triple_points if curve in p.curves]

    def replace(self, **kwargs) -> 'Configuration':
        """Returns a copy with the given constructor arguments replaced."""
        args = dict(surface_class=self.surface_class, components=self.components, double_curves=self.double_curves,
                    triple_points=self.triple_points, transfers=self.transfers, field_char=self.field_char,
                    wmc_assumed=self.wmc_assumed, canonical_order=self.canonical_order, name=self.name)
        args.update(kwargs)
        return Configuration(**args)

    def _key(self):
        return (self.surface_class, self.components, self.double_curves, self.triple_points, self.transfers,
                self.field_char, self.wmc_assumed, self.canonical_order, self.name)

    def __eq__(self, other):
        return isinstance(other, Configuration) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f'Configuration({self.surface_class.value}, name={self.name!r}, components={len(self.components)}, '
                f'double_curves={len(self.double_curves)}, triple_points={len(self.triple_points)})')


def check_structure(c: Configuration):
    """Checks referential integrity of a configuration.

    Raises:
        StructuralError: listing every problem found.
    """
    problems = []
    if c.surface_class not in KODAIRA_ZERO:
        problems.append(f'surface class {c.surface_class.value} is not of Kodaira dimension 0')
    if not c.components:
        problems.append('configuration has no components')
    for kind, items in (('component', c.components), ('double curve', c.double_curves),
                        ('triple point', c.triple_points)):
        problems += [f'duplicate {kind} id {x!r}' for x in duplicates(x.id for x in items)]
    for x in c.components:
        if x.tag in MIN_B2 and x.kind.b2 is not None and x.kind.b2 < MIN_B2[x.tag]:
            problems.append(f'component {x.id}: b2 = {x.kind.b2} is below the minimum {MIN_B2[x.tag]}')
        elif x.tag not in MIN_B2 and x.kind.b2 not in (None, x.kind.betti[2]):
            problems.append(f'component {x.id}: b2 of a {x.tag.value} surface is fixed to {x.kind.betti[2]}')
    ids = set(c._components)
    counts = collections.Counter(curve for p in c.triple_points for curve in p.curves)
    for curve in c.double_curves:
        if curve.genus not in (0, 1):
            problems.append(f'double curve {curve.id}: genus {curve.genus} is not 0 or 1')
        for side in curve.sides:
            if side.component not in ids:
                problems.append(f'double curve {curve.id}: unknown component {side.component!r}')
        if curve.left.component == curve.right.component:
            problems.append(f'double curve {curve.id}: both sides lie on {curve.left.component}')
        if curve.triple_point_count != counts[curve.id]:
            problems.append(f'double curve {curve.id}: triple_point_count {curve.triple_point_count} but '
                            f'{counts[curve.id]} triple points list it')
    for p in c.triple_points:
        if len(set(p.components)) != 3 or len(set(p.curves)) != 3:
            problems.append(f'triple point {p.id}: needs three distinct components and curves')
            continue
        missing = [x for x in p.components if x not in ids] + [x for x in p.curves if x not in c._curves]
        if missing:
            problems.append(f'triple point {p.id}: unknown ids {missing}')
            continue
        pairs = {frozenset(c.curve(x).components) for x in p.curves}
        expected = {frozenset(pair) for pair in ((p.components[0], p.components[1]), (p.components[0], p.components[2]),
                                                 (p.components[1], p.components[2]))}
        if pairs != expected:
            problems.append(f'triple point {p.id}: curves do not join the pairs of its components')
    for t in c.transfers:
        if t.component not in ids or t.curve not in c._curves or t.component not in c.curve(t.curve).components:
            problems.append(f'transfer override {t.component} ⊃ {t.curve} is not an incidence flag')
            continue
        kind, genus = c.component(t.component).kind, c.curve(t.curve).genus
        # Rows index H^1 of the curve, columns H^1 of the component.
        for key, (m, n) in (('betti', (2 * genus, kind.betti[1])), ('coherent', (genus, kind.coherent[1]))):
            rows = getattr(t, key)
            if rows is not None and (len(rows) != m or any(len(row) != n for row in rows)):
                problems.append(f'transfer override {t.component} ⊃ {t.curve}: {key} matrix is not {m}x{n}')
    try:
        check_field_char(c.field_char)
    except ValueError as e:
        problems.append(str(e.args[0]))
    if problems:
        raise StructuralError(f'Inconsistent configuration {c.name}'.strip(), problems)
