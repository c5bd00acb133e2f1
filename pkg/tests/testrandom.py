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


"""Unittests for semistable.random."""

import unittest

import numpy as np

import semistable
from semistable.linalg import IntMatrix, Matrix
from semistable.sncl import check_structure, dual_complex
from semistable.topology import homology
from semistable.zoo import surfaces


class TestRandom(unittest.TestCase):
    def test_integer_matrix(self):
        m = semistable.random.integer_matrix((3, 4), low=-2, high=3)
        self.assertIsInstance(m, IntMatrix)
        self.assertEqual(m.shape, (3, 4))
        self.assertTrue(np.all((m.value >= -2) & (m.value < 3)))

    def test_seed(self):
        a = semistable.random.Generator(42)
        b = semistable.random.Generator(42)
        self.assertEqual(semistable.random.integer_matrix((4, 4), generator=a),
                         semistable.random.integer_matrix((4, 4), generator=b))
        a.seed(42)
        b.seed(7)
        b.seed(42)
        self.assertEqual(semistable.random.integer_matrix((4, 4), generator=a),
                         semistable.random.integer_matrix((4, 4), generator=b))
        self.assertEqual(a.initial_seed, 42)

    def test_unimodular(self):
        generator = semistable.random.Generator(3)
        for n in range(6):
            p, p_inv = semistable.random.unimodular(n, generator=generator)
            self.assertEqual(p @ p_inv, Matrix.identity(n))
            self.assertEqual(p_inv @ p, Matrix.identity(n))
            self.assertIn(p.determinant(), (1, -1))

    def test_chain_complex(self):
        generator = semistable.random.Generator(5)
        for _ in range(10):
            random_complex = semistable.random.chain_complex(length=2, generator=generator)
            self.assertTrue(random_complex.complex.is_complex())
            self.assertEqual(sorted(random_complex.homology), [0, 1, 2])
            for group in random_complex.homology.values():
                self.assertTrue(all(t > 1 for t in group.torsion))

    def test_permutation(self):
        items = ['a', 'b', 'c', 'd', 'e']
        p = semistable.random.permutation(items, semistable.random.Generator(1))
        self.assertEqual(sorted(p), items)
        self.assertEqual(sorted(p.values()), items)

    def test_relabel_configuration(self):
        c = surfaces.bielliptic_klein()
        relabeled = semistable.random.relabel_configuration(c, semistable.random.Generator(11))
        check_structure(relabeled)
        self.assertEqual(len(relabeled.components), len(c.components))
        self.assertTrue(all(x.id.startswith('r') for x in relabeled.components))
        self.assertTrue(all(x.id.startswith('s') for x in relabeled.double_curves))
        self.assertTrue(all(x.id.startswith('t') for x in relabeled.triple_points))
        self.assertEqual(homology(dual_complex(relabeled)), homology(dual_complex(c)))
        twisted = semistable.random.relabel_configuration(surfaces.bielliptic_cycle(3))
        self.assertEqual(len(twisted.transfers), 1)
        self.assertIn(twisted.transfers[0].curve, {x.id for x in twisted.curves_on(twisted.transfers[0].component)})


if __name__ == '__main__':
    unittest.main()
