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


__all__ = ['CHI', 'CoherentPage', 'LogClause', 'LogVerdict', 'ChiVerdict', 'check_chi_flatness',
           'check_logarithmic_class', 'coherent_cohomology']

from typing import NamedTuple, Optional, Tuple

from semistable.constants import ComponentTag
from semistable.errors import PreconditionError
from semistable.linalg import Matrix, check_field_char
from semistable.sncl import CANONICAL_ORDERS, Configuration, dual_complex, stratum_tables
from semistable.spectral.page import SpectralPage, compute_E2
from semistable.spectral.template import TransferTemplate
from semistable.util import index_map

# Holomorphic Euler characteristic of each class.
CHI = {ComponentTag.K3: 2, ComponentTag.ENRIQUES: 1, ComponentTag.ABELIAN: 0, ComponentTag.BIELLIPTIC: 0}
H1 = {ComponentTag.K3: 0, ComponentTag.ENRIQUES: 0, ComponentTag.ABELIAN: 2, ComponentTag.BIELLIPTIC: 1}
FORBIDDEN_CHARS = (2, 3)


class CoherentPage(NamedTuple):
    """The spectral sequence E_1^{s,t} = H^t(Y^(s), O) ⇒ H^{s+t}(Y, O) and its abutment (h^0, h^1, h^2)."""
    e1: SpectralPage
    e2: SpectralPage
    h: Tuple[int, int, int]


def coherent_cohomology(c: Configuration, template: Optional[TransferTemplate] = None,
                        field_char: Optional[int] = None) -> CoherentPage:
    """Computes h^i(Y, O_Y) from the coherent tables of the strata.

    Row t = 0 is the cochain complex of the dual complex over the base field, row t = 1 restricts H^1(O) of
    the components to the double curves through the transfer templates and row t = 2 has no maps.

    Args:
        c: a validated configuration.
        template: transfer maps, by default the configuration's own.
        field_char: overrides the characteristic declared by the configuration.

    Raises:
        PreconditionError: in characteristic 2 or 3.
        MissingTemplateError: if a needed flag has no transfer map.
    """
    field_char = c.field_char if field_char is None else field_char
    check_field_char(field_char)
    if field_char in FORBIDDEN_CHARS:
        raise PreconditionError(f'Coherent comparison needs characteristic 0 or > 3, got {field_char}', field_char)
    template = template or TransferTemplate.for_configuration(c)
    tables = stratum_tables(c)
    gamma = dual_complex(c)
    delta0, delta1 = gamma.boundary(1).T, gamma.boundary(2).T
    position = index_map(x.id for x in c.components)
    blocks = {}
    for i, curve in enumerate(c.double_curves):
        for x in curve.components:
            j = position[x]
            blocks[(i, j)] = template.coherent(c, x, curve.id) * delta0.value[i, j]
    restriction = Matrix.from_blocks([x.genus for x in c.double_curves], [x.kind.coherent[1] for x in c.components],
                                     blocks)
    dims = {(s, t): tables.coherent(s, t) for s in range(3) for t in range(3)}
    differentials = {(0, 0): delta0, (1, 0): delta1, (0, 1): restriction}
    e1 = SpectralPage(1, dims, {st: d for st, d in differentials.items() if 0 not in d.shape}, field_char=field_char)
    e2 = compute_E2(e1)
    return CoherentPage(e1, e2, (e2.total(0), e2.total(1), e2.total(2)))


class LogClause(NamedTuple):
    name: str
    value: int
    expected: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.value in self.expected


class LogVerdict(NamedTuple):
    surface_class: ComponentTag
    h: Tuple[int, int, int]
    clauses: Tuple[LogClause, ...]

    @property
    def ok(self) -> bool:
        return all(x.ok for x in self.clauses)


def check_logarithmic_class(c: Configuration, page: Optional[CoherentPage] = None) -> LogVerdict:
    """Checks h^0 = 1, h^1 and h^2 = h^0(ω) against the class, and the declared canonical order.

    ω-triviality is the declared canonical order, not computed: h^2 is 1 exactly when the order is 1.
    """
    page = page or coherent_cohomology(c)
    h0, h1, h2 = page.h
    cls = c.surface_class
    clauses = (LogClause('h0', h0, (1,)), LogClause('h1', h1, (H1[cls],)),
               LogClause('h2', h2, (1 if c.canonical_order == 1 else 0,)),
               LogClause('canonical-order', c.canonical_order, CANONICAL_ORDERS[cls]))
    return LogVerdict(cls, page.h, clauses)


class ChiVerdict(NamedTuple):
    value: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.value == self.expected


def check_chi_flatness(c: Configuration) -> ChiVerdict:
    """χ(Y, O) = Σ_s (-1)^s χ(Y^(s)) against χ of the generic fibre."""
    tables = stratum_tables(c)
    return ChiVerdict(sum((-1) ** s * tables.chi(s) for s in range(3)), CHI[c.surface_class])
