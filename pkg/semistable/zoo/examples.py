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


__all__ = ['EXAMPLES', 'Example', 'example']

import functools
from typing import Callable, NamedTuple, Optional, Union

from semistable.constants import ComponentTag
from semistable.covers import CoverMap
from semistable.errors import PreconditionError
from semistable.io import ConfigFile
from semistable.sncl import Configuration
from semistable.threefold import Configuration3
from semistable.zoo import surfaces, threefolds

Built = Union[Configuration, Configuration3, CoverMap]


class Example(NamedTuple):
    """A named fixture; sized examples take the number of components, with a default."""
    build: Callable[..., Built]
    sized: bool = False
    default_size: int = 3
    summary: str = ''


EXAMPLES = {
    'k3_smooth': Example(functools.partial(surfaces.smooth, ComponentTag.K3), summary='Type I K3'),
    'enriques_smooth': Example(functools.partial(surfaces.smooth_cover, ComponentTag.ENRIQUES),
                               summary='Type I Enriques with its K3 cover'),
    'abelian_smooth': Example(functools.partial(surfaces.smooth, ComponentTag.ABELIAN), summary='Type I abelian'),
    'bielliptic_smooth': Example(functools.partial(surfaces.smooth_cover, ComponentTag.BIELLIPTIC),
                                 summary='Type I bielliptic with its abelian cover'),
    'k3_chain': Example(surfaces.k3_chain, True, summary='Type II K3 chain'),
    'enriques_chain': Example(surfaces.enriques_chain_cover, True, summary='Type II Enriques chain with its K3 cover'),
    'abelian_cycle': Example(surfaces.abelian_cycle, True, summary='Type II abelian cycle'),
    'abelian_chain': Example(surfaces.abelian_chain, True, summary='chain declared abelian, rejected'),
    'bielliptic_cycle': Example(surfaces.bielliptic_cycle_cover, True,
                                summary='Type II bielliptic cycle with its abelian cover'),
    'bielliptic_chain': Example(surfaces.bielliptic_chain_cover, True,
                                summary='Type II bielliptic chain with its abelian cover'),
    'k3_tetrahedron': Example(surfaces.k3_tetrahedron, summary='Type III K3 on a tetrahedron'),
    'k3_icosahedron': Example(surfaces.k3_icosahedron, summary='Type III K3 on an icosahedron'),
    'abelian_csaszar': Example(surfaces.abelian_csaszar, summary='Type III abelian on the seven vertex torus'),
    'abelian_torus_grid': Example(surfaces.abelian_torus_grid, summary='Type III abelian on a 6 x 4 torus grid'),
    'enriques_rp2': Example(surfaces.enriques_rp2_cover,
                            summary='Type III Enriques on the projective plane with its K3 cover'),
    'bielliptic_klein': Example(surfaces.bielliptic_klein_cover,
                                summary='Type III bielliptic on a Klein bottle with its abelian cover'),
    'cy3_simplex_boundary': Example(threefolds.cy3_simplex_boundary, summary='Type IV Calabi-Yau threefold'),
    'three_torus': Example(threefolds.three_torus, summary='threefold on a 3-torus, rejected'),
}


def example(name: str, size: Optional[int] = None) -> ConfigFile:
    """Builds a named fixture as a configuration file.

    Raises:
        PreconditionError: for an unknown name, a size given to an unsized example or a size too small.
    """
    if name not in EXAMPLES:
        raise PreconditionError(f'Unknown example {name!r}', sorted(EXAMPLES))
    entry = EXAMPLES[name]
    if entry.sized:
        built = entry.build(entry.default_size if size is None else size)
    elif size is not None:
        raise PreconditionError(f'Example {name!r} takes no size', [name])
    else:
        built = entry.build()
    if isinstance(built, CoverMap):
        return ConfigFile(built.base, built)
    return ConfigFile(built)
