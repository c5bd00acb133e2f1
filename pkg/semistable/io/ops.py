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


__all__ = ['ConfigFile', 'from_document', 'load', 'loads', 'save', 'to_document']

import json
import logging
import os
from typing import NamedTuple, Optional, Union

from semistable.constants import ComponentTag, CoverBehavior, CurveRole
from semistable.covers import CoverMap, CoverSheet
from semistable.errors import ConfigurationFileError, StructuralError
from semistable.io.schema import schema_problems
from semistable.sncl import (Component, ComponentKind, Configuration, DoubleCurve, Side, TransferOverride, TriplePoint,
                             check_structure)
from semistable.threefold import (Component3, Configuration3, DoubleSurface, QuadruplePoint, TripleCurve,
                                  check_structure3)
from semistable.typing import FileOrStr

logger = logging.getLogger(__name__)


class ConfigFile(NamedTuple):
    """A parsed configuration document: a surface or threefold configuration and an optional cover of it."""
    configuration: Union[Configuration, Configuration3]
    cover: Optional[CoverMap] = None

    @property
    def dimension(self) -> int:
        return 3 if isinstance(self.configuration, Configuration3) else 2


def _surface(data: dict) -> Configuration:
    meta = data['meta']
    components = [Component(x['id'], ComponentKind(ComponentTag(x['kind']), x.get('b2'))) for x in data['components']]
    curves = [DoubleCurve(x['id'], x['genus'], Side(x['left']['component'], CurveRole(x['left']['role'])),
                          Side(x['right']['component'], CurveRole(x['right']['role'])), x.get('triple_point_count', 0))
              for x in data.get('double_curves', ())]
    points = [TriplePoint(x['id'], tuple(x['curves']), tuple(x['components'])) for x in data.get('triple_points', ())]
    transfers = [TransferOverride(x['component'], x['curve'], x.get('betti'), x.get('coherent'))
                 for x in data.get('transfers', {}).get('overrides', ())]
    c = Configuration(ComponentTag(meta['class']), components, curves, points, transfers,
                      field_char=meta.get('field_char', 0), wmc_assumed=meta.get('wmc_assumed', True),
                      canonical_order=meta.get('canonical_order'), name=meta.get('name', ''))
    check_structure(c)
    return c


def _threefold(data: dict) -> Configuration3:
    meta = data['meta']
    c = Configuration3([Component3(x['id'], x.get('mori_fibre_birational', True), x.get('base_unirational', True))
                        for x in data['components']],
                       [DoubleSurface(x['id'], tuple(x['components']), x.get('rational', True))
                        for x in data.get('double_surfaces', ())],
                       [TripleCurve(x['id'], tuple(x['surfaces']), tuple(x['components']), x.get('rational', True))
                        for x in data.get('triple_curves', ())],
                       [QuadruplePoint(x['id'], tuple(x['curves']), tuple(x['components']))
                        for x in data.get('quadruple_points', ())],
                       wmc_assumed=meta.get('wmc_assumed', True), name=meta.get('name', ''))
    check_structure3(c)
    return c


def _cover(data: dict, base: Configuration) -> CoverMap:
    return CoverMap(data['degree'], _surface(data['total']), base,
                    {x['component']: CoverSheet(x['base'], CoverBehavior(x['behavior']), x.get('sheets', 1))
                     for x in data['component_map']},
                    {x['curve']: x['base'] for x in data['curve_map']},
                    {x['point']: x['base'] for x in data.get('triple_point_map', ())})


def from_document(data) -> ConfigFile:
    """Parses a decoded JSON document.

    Raises:
        ConfigurationFileError: on schema violations or inconsistent incidences.
    """
    problems = schema_problems(data)
    if problems:
        raise ConfigurationFileError('Document does not match the configuration schema', problems)
    try:
        if data['meta'].get('dimension', 2) == 3:
            return ConfigFile(_threefold(data))
        c = _surface(data)
        return ConfigFile(c, _cover(data['cover'], c) if 'cover' in data else None)
    except StructuralError as e:
        raise ConfigurationFileError(e.args[0], e.problems) from e


def _side(side: Side) -> dict:
    return {'component': side.component, 'role': side.role.value}


def _surface_document(c: Configuration) -> dict:
    meta = {'class': c.surface_class.value, 'dimension': 2, 'field_char': c.field_char, 'wmc_assumed': c.wmc_assumed,
            'canonical_order': c.canonical_order}
    if c.name:
        meta['name'] = c.name
    components = []
    for x in c.components:
        entry = {'id': x.id, 'kind': x.tag.value}
        if x.kind.b2 is not None:
            entry['b2'] = x.kind.b2
        components.append(entry)
    data = {
        'meta': meta,
        'components': components,
        'double_curves': [{'id': x.id, 'genus': x.genus, 'left': _side(x.left), 'right': _side(x.right),
                           'triple_point_count': x.triple_point_count} for x in c.double_curves],
        'triple_points': [{'id': x.id, 'curves': list(x.curves), 'components': list(x.components)}
                          for x in c.triple_points],
    }
    if c.transfers:
        overrides = []
        for t in c.transfers:
            entry = {'component': t.component, 'curve': t.curve}
            for key in ('betti', 'coherent'):
                if getattr(t, key) is not None:
                    entry[key] = [list(row) for row in getattr(t, key)]
            overrides.append(entry)
        data['transfers'] = {'overrides': overrides}
    return data


def _threefold_document(c: Configuration3) -> dict:
    meta = {'dimension': 3, 'wmc_assumed': c.wmc_assumed}
    if c.name:
        meta['name'] = c.name
    return {
        'meta': meta,
        'components': [x._asdict() for x in c.components],
        'double_surfaces': [{'id': x.id, 'components': list(x.components), 'rational': x.rational}
                            for x in c.double_surfaces],
        'triple_curves': [{'id': x.id, 'surfaces': list(x.surfaces), 'components': list(x.components),
                           'rational': x.rational} for x in c.triple_curves],
        'quadruple_points': [{'id': x.id, 'curves': list(x.curves), 'components': list(x.components)}
                             for x in c.quadruple_points],
    }


def to_document(doc: Union[ConfigFile, Configuration, Configuration3]) -> dict:
    """The JSON document of a configuration file, with a stable key and list order."""
    if not isinstance(doc, ConfigFile):
        doc = ConfigFile(doc)
    if doc.dimension == 3:
        return _threefold_document(doc.configuration)
    data = _surface_document(doc.configuration)
    if doc.cover is not None:
        m = doc.cover
        data['cover'] = {
            'degree': m.degree,
            'total': _surface_document(m.total),
            'component_map': [{'component': k, 'base': v.base, 'behavior': v.behavior.value, 'sheets': v.sheets}
                              for k, v in m.component_map.items()],
            'curve_map': [{'curve': k, 'base': v} for k, v in m.curve_map.items()],
            'triple_point_map': [{'point': k, 'base': v} for k, v in m.triple_point_map.items()],
        }
    return data


def loads(text: str) -> ConfigFile:
    """Parses a JSON configuration document.

    Raises:
        ConfigurationFileError: on invalid JSON or an invalid document.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigurationFileError(f'Invalid JSON: {e.msg}', [f'line {e.lineno} column {e.colno}']) from e
    return from_document(data)


def load(file: FileOrStr) -> ConfigFile:
    """Loads a configuration file.

    Args:
        file: filename or python file handle of the input file.

    Raises:
        ConfigurationFileError: if the file cannot be read or parsed.
    """
    if isinstance(file, str):
        try:
            with open(file, 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise ConfigurationFileError(f'Cannot read {file}: {e.strerror}', [file]) from e
    else:
        text = file.read()
    doc = loads(text)
    logger.debug('Loaded %r', doc.configuration)
    return doc


def save(file: FileOrStr, doc: Union[ConfigFile, Configuration, Configuration3]):
    """Saves a configuration file as indented JSON.

    Args:
        file: filename or python file handle of the file where the configuration will be saved.
        doc: the configuration, with its cover if any.
    """
    text = json.dumps(to_document(doc), indent=2) + '\n'
    if isinstance(file, str):
        with open(file + '.tmp', 'w', encoding='utf-8') as f:  # Save to a temporary in case the job is killed.
            f.write(text)
        os.replace(file + '.tmp', file)  # Atomic rename to avoid a broken file.
    else:
        file.write(text)
