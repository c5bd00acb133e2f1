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


"""Unittests for the torus rank criterion of abelian surfaces."""

import unittest

from parameterized import parameterized

from semistable.constants import DegenerationType
from semistable.linalg import nilpotency_index
from semistable.neron import UniformizationDatum, monodromy_on_h1, monodromy_on_h2, type_from_rank


class TestNeron(unittest.TestCase):
    @parameterized.expand([
        ('good', 0, 1, DegenerationType.I),
        ('torus_rank_1', 1, 2, DegenerationType.II),
        ('torus_rank_2', 2, 3, DegenerationType.III),
    ])
    def test_type(self, name, rank, index, kind):
        d = UniformizationDatum(rank)
        self.assertEqual(d.abelian_rank, 2 - rank)
        n1 = monodromy_on_h1(d)
        self.assertEqual(n1.dim, 4)
        self.assertEqual(n1.rank(), rank)
        self.assertEqual(nilpotency_index(n1), 2 if rank else 1)
        n2 = monodromy_on_h2(d)
        self.assertEqual(n2.dim, 6)
        self.assertEqual(nilpotency_index(n2), index)
        self.assertEqual(type_from_rank(d), kind)

    def test_h2_rank(self):
        self.assertEqual(monodromy_on_h2(UniformizationDatum(0)).rank(), 0)
        self.assertEqual(monodromy_on_h2(UniformizationDatum(1)).rank(), 2)
        self.assertEqual(monodromy_on_h2(UniformizationDatum(2)).rank(), 2)

    def test_invalid_rank(self):
        for rank in (-1, 3):
            with self.assertRaises(ValueError):
                type_from_rank(UniformizationDatum(rank))


if __name__ == '__main__':
    unittest.main()
