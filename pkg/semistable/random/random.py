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


__all__ = ['DEFAULT_GENERATOR', 'Generator', 'RandomComplex', 'chain_complex', 'integer_matrix', 'permutation',
           'relabel_configuration', 'unimodular']

from typing import Dict, Hashable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from semistable.linalg import ChainComplex, IntegerHomology, IntMatrix
from semistable.sncl import Configuration, DoubleCurve, Side, TransferOverride, TriplePoint


class Generator:
    """Seeded source of random exact objects."""

    def __init__(self, seed: int = 0):
        """Create a random generator, seed is the random generator initial seed."""
        self.initial_seed = seed
        self._rng: Optional[np.random.Generator] = None

    @property
    def rng(self) -> np.random.Generator:
        """The numpy generator, created on first use."""
        if self._rng is None:
            self._rng = np.random.default_rng(self.initial_seed)
        return self._rng

    def seed(self, seed: int = 0):
        """Sets a new random generator seed."""
        self.initial_seed = seed
        self._rng = None

    def __call__(self) -> np.random.Generator:
        return self.rng


DEFAULT_GENERATOR = Generator(0)


def integer_matrix(shape: Tuple[int, int], low: int = -5, high: int = 6,
                   generator: Generator = DEFAULT_GENERATOR) -> IntMatrix:
    """Returns an ``IntMatrix`` of shape ``shape`` with random integers in {low, ..., high-1}."""
    value = generator().integers(low, high, size=shape)
    return IntMatrix(value.tolist(), shape=shape)


def unimodular(n: int, steps: Optional[int] = None,
               generator: Generator = DEFAULT_GENERATOR) -> Tuple[IntMatrix, IntMatrix]:
    """Returns a random n x n integer matrix P of determinant ±1 together with its inverse.

    P is a product of ``steps`` elementary operations (2n by default): additions of a multiple of a row to
    another, swaps and sign changes.
    """
    rng = generator()
    p = np.identity(n, dtype=object)
    p_inv = np.identity(n, dtype=object)
    for _ in range(2 * n if steps is None else steps):
        if n == 0:
            break
        if n == 1:
            p[0] *= -1
            p_inv[:, 0] *= -1
            continue
        i, j = (int(x) for x in rng.choice(n, size=2, replace=False))
        move = rng.integers(3)
        if move == 0:
            q = int(rng.choice([-2, -1, 1, 2]))
            p[i] += q * p[j]
            p_inv[:, j] -= q * p_inv[:, i]
        elif move == 1:
            p[[i, j]] = p[[j, i]]
            p_inv[:, [i, j]] = p_inv[:, [j, i]]
        else:
            p[i] *= -1
            p_inv[:, i] *= -1
    return IntMatrix(p.tolist(), shape=(n, n)), IntMatrix(p_inv.tolist(), shape=(n, n))


class RandomComplex(NamedTuple):
    """A random chain complex with its integral homology known by construction."""
    complex: ChainComplex
    homology: Dict[int, IntegerHomology]


def chain_complex(length: int = 3, max_rank: int = 3, max_torsion: int = 4,
                  generator: Generator = DEFAULT_GENERATOR) -> RandomComplex:
    """Returns a random chain complex in degrees 0..length with known integral homology.

    In degree n the space splits as B_n + H_n + E_n where d_n maps E_n onto the multiples t_1 | t_2 | ... of a
    basis of B_{n-1} and vanishes on B_n + H_n. The homology is Z^{dim H_n} plus Z/t_i for every t_i > 1. The split
    bases are then hidden by random unimodular changes of basis in every degree.

    Args:
        length: top degree.
        max_rank: bound on the dimensions of the B, H and E parts.
        max_torsion: bound on the first multiple t_1.
        generator: source of randomness.
    """
    rng = generator()
    free = [int(rng.integers(0, max_rank + 1)) for _ in range(length + 1)]
    bounded = [int(rng.integers(0, max_rank + 1)) for _ in range(length)] + [0]
    factors: List[List[int]] = []
    for b in bounded:
        t, chain = int(rng.integers(1, max_torsion + 1)), []
        for _ in range(b):
            chain.append(t)
            t *= int(rng.integers(1, 3))
        factors.append(chain)
    # E_n is matched with B_{n-1}; E_0 is empty.
    dims = {n: bounded[n] + free[n] + (bounded[n - 1] if n else 0) for n in range(length + 1)}
    bases = {n: unimodular(dims[n], generator=generator) for n in range(length + 1)}
    differentials = {}
    for n in range(1, length + 1):
        split = np.zeros((dims[n - 1], dims[n]), dtype=object)
        offset = bounded[n] + free[n]
        for i, t in enumerate(factors[n - 1]):
            split[i, offset + i] = t
        d = IntMatrix(split.tolist(), shape=(dims[n - 1], dims[n]))
        differentials[n] = bases[n - 1][0] @ d @ bases[n][1]
    homology = {n: IntegerHomology(free[n], tuple(sorted(t for t in factors[n] if t > 1)))
                for n in range(length + 1)}
    return RandomComplex(ChainComplex(dims, differentials), homology)


def permutation(items: Sequence[Hashable], generator: Generator = DEFAULT_GENERATOR) -> Dict[Hashable, Hashable]:
    """A random bijection of the items onto themselves."""
    order = generator().permutation(len(items))
    return {x: items[int(i)] for x, i in zip(items, order)}


def relabel_configuration(c: Configuration, generator: Generator = DEFAULT_GENERATOR) -> Configuration:
    """Renames every id of a configuration and shuffles the order of its lists.

    Components become r0, r1, ..., double curves s0, ... and triple points t0, ... in a random assignment; the
    result is isomorphic to the input.
    """
    rng = generator()

    def renaming(items, prefix: str) -> Dict[str, str]:
        order = rng.permutation(len(items))
        return {x.id: f'{prefix}{int(i)}' for x, i in zip(items, order)}

    comp = renaming(c.components, 'r')
    curve = renaming(c.double_curves, 's')
    point = renaming(c.triple_points, 't')
    components = [x._replace(id=comp[x.id]) for x in c.components]
    curves = [DoubleCurve(curve[x.id], x.genus, Side(comp[x.left.component], x.left.role),
                          Side(comp[x.right.component], x.right.role), x.triple_point_count)
              for x in c.double_curves]
    points = [TriplePoint(point[x.id], tuple(curve[y] for y in x.curves), tuple(comp[y] for y in x.components))
              for x in c.triple_points]
    transfers = [TransferOverride(comp[t.component], curve[t.curve], t.betti, t.coherent) for t in c.transfers]
    shuffle = lambda xs: [xs[int(i)] for i in rng.permutation(len(xs))]
    return c.replace(components=shuffle(components), double_curves=shuffle(curves), triple_points=shuffle(points),
                     transfers=transfers)
