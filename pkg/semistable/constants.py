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

__all__ = ['ComponentTag', 'CoverBehavior', 'CurveRole', 'DegenerationType', 'KODAIRA_ZERO', 'ReportFormat',
           'SurfaceTag']

import enum


class ComponentTag(enum.Enum):
    """Surface kinds that can appear as components of a special fibre or as the class of a generic fibre."""
    K3 = 'K3'
    ENRIQUES = 'Enriques'
    ABELIAN = 'Abelian'
    BIELLIPTIC = 'Bielliptic'
    RATIONAL = 'Rational'
    ELLIPTIC_RULED = 'EllipticRuled'


KODAIRA_ZERO = (ComponentTag.K3, ComponentTag.ENRIQUES, ComponentTag.ABELIAN, ComponentTag.BIELLIPTIC)


class CurveRole(enum.Enum):
    """The role a double curve plays on one of the two components containing it."""
    RULING = 'Ruling'
    TWO_RULING = 'TwoRuling'
    CYCLE_MEMBER = 'CycleMember'
    ELLIPTIC_ON_RATIONAL = 'EllipticOnRational'


class DegenerationType(enum.IntEnum):
    """Degeneration types, numbered like the nilpotency index they correspond to."""
    I = 1  # noqa: E741
    II = 2
    III = 3
    IV = 4

    def __str__(self):
        return self.name


class CoverBehavior(enum.Enum):
    """How the preimage of a base component looks in a finite etale cover."""
    IRREDUCIBLE_COVER = 'IrreducibleCover'
    SPLIT_COPIES = 'SplitCopies'


class SurfaceTag(enum.Enum):
    """Topological type of a closed surface."""
    SPHERE = 'Sphere'
    REAL_PROJECTIVE_PLANE = 'RealProjectivePlane'
    TORUS = 'Torus'
    KLEIN_BOTTLE = 'KleinBottle'
    ORIENTABLE_GENUS = 'OrientableGenus'
    NONORIENTABLE_GENUS = 'NonorientableGenus'
    NOT_A_CLOSED_SURFACE = 'NotAClosedSurface'


class ReportFormat(enum.Enum):
    """Output formats of the command line reports."""
    TEXT = 'text'
    JSON = 'json'
