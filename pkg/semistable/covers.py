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


__all__ = ['CoverMap', 'CoverSheet', 'CoverVerdict', 'EulerVerdict', 'TransferVerdict', 'check_euler_multiplicativity',
           'check_type_transfer', 'validate_cover']

import collections
import logging
from typing import Dict, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from semistable.constants import ComponentTag, CoverBehavior
from semistable.errors import PreconditionError
from semistable.sncl import Configuration, TypeVerdict, Violation, classify, dual_complex
from semistable.topology import euler_characteristic

logger = logging.getLogger(__name__)

# Kinds (total, base) allowed for a component covering a base component irreducibly.
IRREDUCIBLE_PAIRS = {
    (ComponentTag.ELLIPTIC_RULED, ComponentTag.ELLIPTIC_RULED),
    (ComponentTag.K3, ComponentTag.ENRIQUES),
    (ComponentTag.ABELIAN, ComponentTag.BIELLIPTIC),
    (ComponentTag.ABELIAN, ComponentTag.ABELIAN),
}
# Classes (total, base) of a cover with the allowed degrees; None allows any degree.
CLASS_PAIRS = {
    (ComponentTag.K3, ComponentTag.ENRIQUES): (2,),
    (ComponentTag.ABELIAN, ComponentTag.BIELLIPTIC): (2, 3, 4, 6),
    (ComponentTag.ABELIAN, ComponentTag.ABELIAN): None,
}


class CoverSheet(NamedTuple):
    """Image of a total component: its base component, how it covers it and the number of sheets."""
    base: str
    behavior: CoverBehavior
    sheets: int = 1


class CoverMap:
    """Combinatorial finite étale cover of a base configuration by a total configuration."""

    def __init__(self, degree: int, total: Configuration, base: Configuration,
                 component_map: Mapping[str, CoverSheet], curve_map: Mapping[str, str],
                 triple_point_map: Optional[Mapping[str, str]] = None):
        """Creates a cover map.

        Args:
            degree: degree of the cover.
            total: the covering configuration.
            base: the covered configuration.
            component_map: total component id -> CoverSheet.
            curve_map: total double curve id -> base double curve id.
            triple_point_map: total triple point id -> base triple point id; derived from the curve map when
                omitted and the image is unique.
        """
        self.degree = degree
        self.total = total
        self.base = base
        self.component_map: Dict[str, CoverSheet] = dict(component_map)
        self.curve_map: Dict[str, str] = dict(curve_map)
        self.triple_point_map: Dict[str, str] = dict(triple_point_map or {})
        for p in total.triple_points:
            if p.id not in self.triple_point_map:
                image = self._derive_point(p.curves)
                if image is not None:
                    self.triple_point_map[p.id] = image

    def _derive_point(self, curves: Tuple[str, ...]) -> Optional[str]:
        images = collections.Counter(self.curve_map.get(x) for x in curves)
        candidates = [q.id for q in self.base.triple_points if collections.Counter(q.curves) == images]
        return candidates[0] if len(candidates) == 1 else None

    def preimages(self, base_component: str) -> List[str]:
        return [x for x, sheet in self.component_map.items() if sheet.base == base_component]

    def is_free(self) -> bool:
        """Whether every cell of the base dual complex has exactly degree preimages."""
        for images, cells in ((list(s.base for s in self.component_map.values()), self.base.components),
                              (list(self.curve_map.values()), self.base.double_curves),
                              (list(self.triple_point_map.values()), self.base.triple_points)):
            counts = collections.Counter(images)
            if any(counts[x.id] != self.degree for x in cells):
                return False
        return True

    def __repr__(self):
        return f'CoverMap(degree={self.degree}, total={self.total!r}, base={self.base!r})'


class CoverVerdict(NamedTuple):
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _is_two_rational_components(c: Configuration) -> bool:
    return (len(c.components) == 2 and all(x.tag == ComponentTag.RATIONAL for x in c.components)
            and len(c.double_curves) == 1 and c.double_curves[0].genus == 1)


def _sheet_bound(m: CoverMap, components: Sequence[str]) -> int:
    """Most sheets a stratum of the total configuration lying on the given components can have over its image.

    A stratum on a split copy maps isomorphically; otherwise it covers its image at most as often as the
    components around it do.
    """
    sheets = [m.component_map[x] for x in components if x in m.component_map]
    if not sheets or any(s.behavior == CoverBehavior.SPLIT_COPIES for s in sheets):
        return 1
    return min(s.sheets for s in sheets)


def _preimage_violations(m: CoverMap, kind: str, base_cells: Sequence, total_cells: Sequence,
                         images: Mapping[str, str]) -> List[Violation]:
    """Every base stratum needs preimages whose sheets can add up to the degree."""
    cells = {x.id: x for x in total_cells}
    preimages = collections.defaultdict(list)
    for x, y in images.items():
        if x in cells:
            preimages[y].append(cells[x])
    v = []
    for y in base_cells:
        found = preimages[y.id]
        bound = sum(_sheet_bound(m, x.components) for x in found)
        if not found:
            v.append(Violation(f'{kind}-preimages', y.id, f'base {kind} has no preimage'))
        elif len(found) > m.degree:
            v.append(Violation(f'{kind}-preimages', y.id, f'{len(found)} preimages over a degree {m.degree} cover'))
        elif bound < m.degree:
            v.append(Violation(f'{kind}-preimages', y.id, f'{len(found)} preimages carry at most {bound} sheets of '
                                                          f'a degree {m.degree} cover'))
    return v


def validate_cover(m: CoverMap) -> CoverVerdict:
    """Checks sheet counts, component kinds, incidences and the obstructions to étale covers.

    A rational base component is simply connected, so it only admits split copies; two rational components
    meeting along an elliptic curve never cover a configuration of the surfaces considered here.
    """
    v: List[Violation] = []
    total, base = m.total, m.base
    if m.degree < 2:
        v.append(Violation('degree', 'cover', f'degree {m.degree} is below 2'))
    pair = (total.surface_class, base.surface_class)
    if pair not in CLASS_PAIRS:
        v.append(Violation('class-pair', 'cover', f'{pair[0].value} does not cover {pair[1].value}'))
    elif CLASS_PAIRS[pair] is not None:
        if m.degree not in CLASS_PAIRS[pair]:
            v.append(Violation('class-pair', 'cover', f'degree {m.degree} for {pair[0].value} over {pair[1].value}'))
        if m.degree != base.canonical_order:
            v.append(Violation('canonical-order', 'cover', f'degree {m.degree} differs from the canonical order '
                                                           f'{base.canonical_order} of the base'))
    if _is_two_rational_components(total):
        v.append(Violation('two-rational-components', 'cover',
                           'two rational surfaces meeting along an elliptic curve cannot be an étale cover'))
    base_ids = {x.id for x in base.components}
    for x in total.components:
        sheet = m.component_map.get(x.id)
        if sheet is None or sheet.base not in base_ids:
            v.append(Violation('component-map', x.id, 'component is not mapped to a base component'))
            continue
        target = base.component(sheet.base)
        if sheet.behavior == CoverBehavior.SPLIT_COPIES:
            if sheet.sheets != 1 or x.tag != target.tag:
                v.append(Violation('split-copies', x.id, f'a split copy needs one sheet and kind {target.tag.value}'))
        else:
            if target.tag == ComponentTag.RATIONAL:
                v.append(Violation('rational-simply-connected', x.id,
                                   f'rational component {target.id} only admits split copies'))
            elif (x.tag, target.tag) not in IRREDUCIBLE_PAIRS:
                v.append(Violation('irreducible-kinds', x.id, f'{x.tag.value} cannot cover {target.tag.value}'))
            if sheet.sheets < 2:
                v.append(Violation('irreducible-kinds', x.id, 'an irreducible cover needs at least two sheets'))
    for y in base.components:
        sheets = sum(m.component_map[x].sheets for x in m.preimages(y.id))
        if sheets != m.degree:
            v.append(Violation('sheet-count', y.id, f'{sheets} sheets over a degree {m.degree} cover'))
    base_curves = {x.id: x for x in base.double_curves}
    for x in total.double_curves:
        image = base_curves.get(m.curve_map.get(x.id))
        if image is None:
            v.append(Violation('incidence', x.id, 'double curve is not mapped to a base double curve'))
            continue
        ends = collections.Counter(m.component_map[y].base if y in m.component_map else None for y in x.components)
        if ends != collections.Counter(image.components):
            v.append(Violation('incidence', x.id, f'endpoints do not map onto those of {image.id}'))
    base_points = {p.id: p for p in base.triple_points}
    for p in total.triple_points:
        image = base_points.get(m.triple_point_map.get(p.id))
        if image is None:
            v.append(Violation('triple-points', p.id, 'triple point is not mapped to a base triple point'))
            continue
        if collections.Counter(m.curve_map.get(x) for x in p.curves) != collections.Counter(image.curves):
            v.append(Violation('triple-points', p.id, f'curves do not map onto those of {image.id}'))
    v += _preimage_violations(m, 'curve', base.double_curves, total.double_curves, m.curve_map)
    v += _preimage_violations(m, 'point', base.triple_points, total.triple_points, m.triple_point_map)
    logger.debug('Cover of degree %d: %d violations', m.degree, len(v))
    return CoverVerdict(tuple(v))


class EulerVerdict(NamedTuple):
    total: int
    base: int
    degree: int
    free: bool

    @property
    def ok(self) -> bool:
        """Multiplicativity is only expected for free covers."""
        return not self.free or self.total == self.degree * self.base


def check_euler_multiplicativity(m: CoverMap) -> EulerVerdict:
    return EulerVerdict(euler_characteristic(dual_complex(m.total)), euler_characteristic(dual_complex(m.base)),
                        m.degree, m.is_free())


class TransferVerdict(NamedTuple):
    total: TypeVerdict
    base: TypeVerdict

    @property
    def ok(self) -> bool:
        return self.total.type is not None and self.total.type == self.base.type


def check_type_transfer(m: CoverMap) -> TransferVerdict:
    """Classifies both sides of a valid cover; the degeneration types must agree.

    Raises:
        PreconditionError: if the cover fails validate_cover.
    """
    verdict = validate_cover(m)
    if not verdict.ok:
        raise PreconditionError('Invalid cover', [str(x) for x in verdict.violations])
    return TransferVerdict(classify(m.total), classify(m.base))
