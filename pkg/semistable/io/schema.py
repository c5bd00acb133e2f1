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


"""JSON schema of configuration documents."""

__all__ = ['SCHEMA', 'schema_problems']

from typing import List

from jsonschema import Draft202012Validator

_ID = {'type': 'string', 'minLength': 1}
_IDS = lambda n: {'type': 'array', 'items': _ID, 'minItems': n, 'maxItems': n}
_ROWS = {'type': 'array', 'items': {'type': 'array', 'items': {'type': 'integer'}}}
_SIDE = {
    'type': 'object',
    'properties': {'component': _ID, 'role': {'enum': ['Ruling', 'TwoRuling', 'CycleMember', 'EllipticOnRational']}},
    'required': ['component', 'role'],
    'additionalProperties': False,
}
_CLASS = {'enum': ['K3', 'Enriques', 'Abelian', 'Bielliptic']}
_META = {
    'type': 'object',
    'properties': {
        'class': _CLASS,
        'dimension': {'enum': [2, 3]},
        'field_char': {'type': 'integer', 'minimum': 0},
        'wmc_assumed': {'type': 'boolean'},
        'canonical_order': {'type': 'integer', 'minimum': 1},
        'name': {'type': 'string'},
    },
    'additionalProperties': False,
}
_COMPONENT = {
    'type': 'object',
    'properties': {
        'id': _ID,
        'kind': {'enum': ['K3', 'Enriques', 'Abelian', 'Bielliptic', 'Rational', 'EllipticRuled']},
        'b2': {'type': 'integer', 'minimum': 0},
    },
    'required': ['id', 'kind'],
    'additionalProperties': False,
}
_CURVE = {
    'type': 'object',
    'properties': {'id': _ID, 'genus': {'type': 'integer', 'minimum': 0}, 'left': _SIDE, 'right': _SIDE,
                   'triple_point_count': {'type': 'integer', 'minimum': 0}},
    'required': ['id', 'genus', 'left', 'right'],
    'additionalProperties': False,
}
_POINT = {
    'type': 'object',
    'properties': {'id': _ID, 'curves': _IDS(3), 'components': _IDS(3)},
    'required': ['id', 'curves', 'components'],
    'additionalProperties': False,
}
_TRANSFERS = {
    'type': 'object',
    'properties': {
        'overrides': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {'component': _ID, 'curve': _ID, 'betti': _ROWS, 'coherent': _ROWS},
                'required': ['component', 'curve'],
                'additionalProperties': False,
            },
        },
    },
    'additionalProperties': False,
}
_SURFACE_BODY = {
    'components': {'type': 'array', 'items': _COMPONENT, 'minItems': 1},
    'double_curves': {'type': 'array', 'items': _CURVE},
    'triple_points': {'type': 'array', 'items': _POINT},
    'transfers': _TRANSFERS,
}
_TOTAL = {
    'type': 'object',
    'properties': {'meta': {**_META, 'required': ['class']}, **_SURFACE_BODY},
    'required': ['meta', 'components'],
    'additionalProperties': False,
}
_COVER = {
    'type': 'object',
    'properties': {
        'degree': {'type': 'integer', 'minimum': 1},
        'total': _TOTAL,
        'component_map': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {'component': _ID, 'base': _ID,
                               'behavior': {'enum': ['IrreducibleCover', 'SplitCopies']},
                               'sheets': {'type': 'integer', 'minimum': 1}},
                'required': ['component', 'base', 'behavior'],
                'additionalProperties': False,
            },
        },
        'curve_map': {
            'type': 'array',
            'items': {'type': 'object', 'properties': {'curve': _ID, 'base': _ID}, 'required': ['curve', 'base'],
                      'additionalProperties': False},
        },
        'triple_point_map': {
            'type': 'array',
            'items': {'type': 'object', 'properties': {'point': _ID, 'base': _ID}, 'required': ['point', 'base'],
                      'additionalProperties': False},
        },
    },
    'required': ['degree', 'total', 'component_map', 'curve_map'],
    'additionalProperties': False,
}
_THREEFOLD_BODY = {
    'components': {
        'type': 'array',
        'minItems': 1,
        'items': {
            'type': 'object',
            'properties': {'id': _ID, 'mori_fibre_birational': {'type': 'boolean'},
                           'base_unirational': {'type': 'boolean'}},
            'required': ['id'],
            'additionalProperties': False,
        },
    },
    'double_surfaces': {
        'type': 'array',
        'items': {'type': 'object', 'properties': {'id': _ID, 'components': _IDS(2), 'rational': {'type': 'boolean'}},
                  'required': ['id', 'components'], 'additionalProperties': False},
    },
    'triple_curves': {
        'type': 'array',
        'items': {'type': 'object',
                  'properties': {'id': _ID, 'surfaces': _IDS(3), 'components': _IDS(3),
                                 'rational': {'type': 'boolean'}},
                  'required': ['id', 'surfaces', 'components'], 'additionalProperties': False},
    },
    'quadruple_points': {
        'type': 'array',
        'items': {'type': 'object', 'properties': {'id': _ID, 'curves': _IDS(4), 'components': _IDS(4)},
                  'required': ['id', 'curves', 'components'], 'additionalProperties': False},
    },
}

SCHEMA = {
    '$schema': 'https://json-schema.org/draft/2020-12/schema',
    'type': 'object',
    'required': ['meta', 'components'],
    'properties': {'meta': _META},
    'if': {'properties': {'meta': {'properties': {'dimension': {'const': 3}}, 'required': ['dimension']}}},
    'then': {
        'properties': {'meta': _META, **_THREEFOLD_BODY},
        'additionalProperties': False,
    },
    'else': {
        'properties': {'meta': {'required': ['class']}, **_SURFACE_BODY, 'cover': _COVER},
        'additionalProperties': False,
    },
}

_VALIDATOR = Draft202012Validator(SCHEMA)


def schema_problems(document) -> List[str]:
    """Schema violations of a document as 'path: message' strings, in a stable order."""
    errors = sorted(_VALIDATOR.iter_errors(document), key=lambda e: (list(map(str, e.absolute_path)), e.message))
    return [f'{"/".join(map(str, e.absolute_path)) or "<root>"}: {e.message}' for e in errors]
