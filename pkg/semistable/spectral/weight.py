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


__all__ = ['COVERED_CLASSES', 'AbutmentEntry', 'AbutmentReport', 'H2Model', 'SymmetryPair', 'SymmetryReport',
           'WeightAnalysis', 'anchor_triple_points', 'build_E1', 'check_abutment', 'check_wm_symmetry', 'h2_model',
           'monodromy_index', 'weight_analysis']

import logging
from typing import TYPE_CHECKING, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from semistable.constants import ComponentTag, DegenerationType
from semistable.linalg import IntMatrix, Matrix
from semistable.sncl import Configuration, StratumTables, dual_complex, stratum_tables
from semistable.sncl.configuration import DEFAULT_BETTI
from semistable.spectral.page import SpectralPage, Summand, compute_E2
from semistable.spectral.template import TransferTemplate
from semistable.util import index_map

if TYPE_CHECKING:
    from semistable.covers import CoverMap

logger = logging.getLogger(__name__)

SURFACE_DIM = 2
TWISTED_SUMMAND_NOTE = 'd_1 on Tate twisted summands uses transposed restrictions (Gysin convention)'
# Classes whose monodromy index is read from the canonical cover when one is supplied.
COVERED_CLASSES = (ComponentTag.ENRIQUES, ComponentTag.BIELLIPTIC)


def anchor_triple_points(c: Configuration) -> Dict[str, str]:
    """Assigns every triple point to one of its three components.

    Each component with double curves offers b2 - 2 slots in its H^2 beside the boundary and fibre classes.
    Triple points are matched to slots by maximum bipartite matching; a point left over goes to its least
    loaded component, ties broken by component position.
    """
    position = index_map(x.id for x in c.components)
    slots: List[str] = []
    for x in c.components:
        if c.curves_on(x.id):
            slots += [x.id] * max(x.kind.betti[2] - 2, 0)
    anchors: Dict[str, str] = {}
    if c.triple_points and slots:
        rows, cols = [], []
        for i, p in enumerate(c.triple_points):
            for j, owner in enumerate(slots):
                if owner in p.components:
                    rows.append(i)
                    cols.append(j)
        graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(c.triple_points), len(slots)))
        matched = maximum_bipartite_matching(graph, perm_type='column')
        for p, j in zip(c.triple_points, matched):
            if j >= 0:
                anchors[p.id] = slots[j]
    load = {x.id: 0 for x in c.components}
    for owner in anchors.values():
        load[owner] += 1
    for p in c.triple_points:
        if p.id not in anchors:
            owner = min(p.components, key=lambda x: (load[x], position[x]))
            anchors[p.id] = owner
            load[owner] += 1
            logger.debug('Triple point %s exceeds declared capacity, anchored on %s', p.id, owner)
    return anchors


class H2Model(NamedTuple):
    """Bases of H^2(Y^(0)), per component [η, φ, τ_f for anchored points f, primitive classes].

    Components without double curves only have primitive classes.
    """
    offsets: Dict[str, int]
    sizes: Dict[str, int]
    anchors: Dict[str, str]
    taus: Dict[str, int]

    @property
    def dim(self) -> int:
        return sum(self.sizes.values())

    def b2(self, component: str) -> int:
        return self.sizes[component]


def h2_model(c: Configuration, anchors: Optional[Dict[str, str]] = None) -> H2Model:
    anchors = anchor_triple_points(c) if anchors is None else anchors
    offsets, sizes, taus = {}, {}, {}
    offset = 0
    for x in c.components:
        offsets[x.id] = offset
        if c.curves_on(x.id):
            mine = [p.id for p in c.triple_points if anchors[p.id] == x.id]
            for i, p in enumerate(mine):
                taus[p] = offset + 2 + i
            sizes[x.id] = max(x.kind.betti[2], 2 + len(mine))
        else:
            sizes[x.id] = x.kind.betti[2]
        offset += sizes[x.id]
    return H2Model(offsets, sizes, anchors, taus)


class _Maps:
    """The component maps of d_1, indexed by stratum and cohomological degree."""

    def __init__(self, c: Configuration, template: TransferTemplate, model: H2Model):
        gamma = dual_complex(c)
        self.delta0 = gamma.boundary(1).T
        self.delta1 = gamma.boundary(2).T
        self.t = self._h1_restriction(c, template)
        self.a, self.b = self._h2_maps(c, model)

    def _h1_restriction(self, c: Configuration, template: TransferTemplate) -> Matrix:
        row_sizes = [2 * x.genus for x in c.double_curves]
        col_sizes = [x.kind.betti[1] for x in c.components]
        position = index_map(x.id for x in c.components)
        blocks = {}
        for i, curve in enumerate(c.double_curves):
            for x in curve.components:
                j = position[x]
                sign = self.delta0.value[i, j]
                blocks[(i, j)] = template.betti(c, x, curve.id) * sign
        return Matrix.from_blocks(row_sizes, col_sizes, blocks)

    def _h2_maps(self, c: Configuration, model: H2Model) -> Tuple[IntMatrix, IntMatrix]:
        position = index_map(x.id for x in c.components)
        point_position = index_map(p.id for p in c.triple_points)
        a = np.zeros((model.dim, len(c.double_curves)), dtype=object)
        b = np.zeros((len(c.double_curves), model.dim), dtype=object)
        for e in range(len(c.double_curves)):
            for x in c.components:
                sign = self.delta0.value[e, position[x.id]]
                if sign:
                    a[model.offsets[x.id], e] += sign
                    b[e, model.offsets[x.id] + 1] += sign
        for p, column in model.taus.items():
            f = point_position[p]
            for e in range(len(c.double_curves)):
                a[column, e] += self.delta1.value[f, e]
                b[e, column] -= self.delta1.value[f, e]
        return IntMatrix._wrap(a), IntMatrix._wrap(b)

    def restriction(self, a: int, k: int) -> Optional[Matrix]:
        """H^k(Y^(a)) -> H^k(Y^(a+1))."""
        return {(0, 0): self.delta0, (1, 0): self.delta1, (0, 1): self.t, (0, 2): self.b}.get((a, k))

    def gysin(self, a: int, k: int) -> Optional[Matrix]:
        """H^k(Y^(a)) -> H^{k+2}(Y^(a-1))."""
        return {(1, 0): self.a, (2, 0): self.delta1.T, (1, 1): self.t.T, (1, 2): self.delta0.T}.get((a, k))


def _stratum_size(tables: StratumTables, model: H2Model, a: int, k: int) -> int:
    if a == 0 and k == 2:
        return model.dim
    return tables.betti(a, k)


def build_E1(c: Configuration, template: Optional[TransferTemplate] = None) -> SpectralPage:
    """The E_1 page E_1^{s,t} = ⊕_{j >= max(0,-s)} H^{t-2j}(Y^(s+2j))(-j) of the weight spectral sequence.

    d_1 is the sum of restrictions (to the next stratum, same twist) and Gysin maps (to the previous stratum,
    twist lowered by one). On H^0 the restrictions are the cochain maps of the dual complex, on H^1 they are
    the transfer templates and on H^2 they act through the model of h2_model.

    Raises:
        MissingTemplateError: if a needed flag has no transfer map.
    """
    template = template or TransferTemplate.for_configuration(c)
    model = h2_model(c)
    maps = _Maps(c, template, model)
    tables = stratum_tables(c)
    summands: Dict[Tuple[int, int], Tuple[Summand, ...]] = {}
    for s in range(-SURFACE_DIM, SURFACE_DIM + 1):
        for t in range(0, 2 * SURFACE_DIM + 1):
            terms = []
            j = max(0, -s)
            while s + 2 * j <= SURFACE_DIM:
                a, k = s + 2 * j, t - 2 * j
                if 0 <= k <= 2 * (SURFACE_DIM - a):
                    size = _stratum_size(tables, model, a, k)
                    if size:
                        terms.append(Summand(j, a, k, size))
                j += 1
            if terms:
                summands[(s, t)] = tuple(terms)
    differentials = {}
    for (s, t), source in summands.items():
        target = summands.get((s + 1, t))
        if not target:
            continue
        blocks = {}
        for q, x in enumerate(source):
            for p, y in enumerate(target):
                if (y.j, y.a, y.k) == (x.j, x.a + 1, x.k):
                    m = maps.restriction(x.a, x.k)
                elif (y.j, y.a, y.k) == (x.j - 1, x.a - 1, x.k + 2):
                    m = maps.gysin(x.a, x.k)
                else:
                    continue
                if m is not None:
                    blocks[(p, q)] = m
        differentials[(s, t)] = Matrix.from_blocks([y.size for y in target], [x.size for x in source], blocks)
    dims = {st: sum(x.size for x in terms) for st, terms in summands.items()}
    logger.debug('E_1 of %s: %s', c.name, dims)
    return SpectralPage(1, dims, differentials, summands, notes=(TWISTED_SUMMAND_NOTE,))


def monodromy_index(e2: SpectralPage, surface_class: Optional[ComponentTag] = None) -> int:
    """Nilpotency index of N read from E_2: 3 if E_2^{2,0} ≠ 0, else 2 if E_2^{1,1} ≠ 0, else 1.

    The criterion is the same for every surface class; surface_class is accepted for reporting symmetry.
    """
    del surface_class
    if e2.dim(2, 0):
        return 3
    if e2.dim(1, 1):
        return 2
    return 1


class SymmetryPair(NamedTuple):
    r: int
    left: int
    right: int

    @property
    def ok(self) -> bool:
        return self.left == self.right


class SymmetryReport(NamedTuple):
    """dim E_2^{-r,w+r} against dim E_2^{r,w-r} for r >= 1."""
    w: int
    pairs: Tuple[SymmetryPair, ...]

    @property
    def ok(self) -> bool:
        return all(x.ok for x in self.pairs)

    @property
    def failures(self) -> Tuple[SymmetryPair, ...]:
        return tuple(x for x in self.pairs if not x.ok)


def check_wm_symmetry(e2: SpectralPage, w: int) -> SymmetryReport:
    reach = max([abs(s) for s, _ in e2.dims] + [0])
    pairs = tuple(SymmetryPair(r, e2.dim(-r, w + r), e2.dim(r, w - r)) for r in range(1, reach + 1))
    return SymmetryReport(w, pairs)


class AbutmentEntry(NamedTuple):
    """Σ_{s+t=n} dim E_2^{s,t} against b_n; status is 'pass', 'fail' or 'opt-in'."""
    n: int
    total: int
    expected: int
    status: str


class AbutmentReport(NamedTuple):
    entries: Tuple[AbutmentEntry, ...]

    @property
    def ok(self) -> bool:
        return all(x.status != 'fail' for x in self.entries)

    def entry(self, n: int) -> AbutmentEntry:
        return self.entries[n]


def check_abutment(e2: SpectralPage, expected: Sequence[int], b2_declared: bool = True) -> AbutmentReport:
    """Compares the antidiagonal sums of E_2 with the Betti numbers of the generic fibre.

    Only degree 2 depends on the b2 of rational and elliptic ruled components; unless those were declared
    its entry is reported as 'opt-in' and not judged.
    """
    entries = []
    for n, b in enumerate(expected):
        total = e2.total(n)
        if n == SURFACE_DIM and not b2_declared:
            status = 'opt-in'
        else:
            status = 'pass' if total == b else 'fail'
        entries.append(AbutmentEntry(n, total, b, status))
    return AbutmentReport(tuple(entries))


class WeightAnalysis(NamedTuple):
    """Weight spectral sequence results; carrier tells whether the index was read on the configuration itself
    or on its canonical cover."""
    e1: SpectralPage
    e2: SpectralPage
    index: int
    carrier: str
    symmetry: Tuple[SymmetryReport, ...]
    abutment: AbutmentReport
    anchors: Dict[str, str]

    @property
    def type(self) -> DegenerationType:
        return DegenerationType(self.index)


def weight_analysis(c: Configuration, template: Optional[TransferTemplate] = None,
                    cover: Optional['CoverMap'] = None) -> WeightAnalysis:
    """Builds E_1 and E_2, reads the monodromy index and runs the symmetry and abutment checks.

    For Enriques and bielliptic configurations the index is read on the canonical cover when one is given,
    since H^2 of the generic fibre with coefficients in the monodromy representation equals H^2 of the cover.
    """
    e1 = build_E1(c, template)
    e2 = compute_E2(e1)
    index, carrier = monodromy_index(e2, c.surface_class), 'configuration'
    if cover is not None and c.surface_class in COVERED_CLASSES:
        cover_e2 = compute_E2(build_E1(cover.total))
        index, carrier = monodromy_index(cover_e2, cover.total.surface_class), 'canonical-cover'
    symmetry = tuple(check_wm_symmetry(e2, w) for w in range(2 * SURFACE_DIM + 1))
    b2_declared = all(x.kind.b2_declared for x in c.components)
    abutment = check_abutment(e2, DEFAULT_BETTI[c.surface_class], b2_declared)
    return WeightAnalysis(e1, e2, index, carrier, symmetry, abutment, anchor_triple_points(c))
