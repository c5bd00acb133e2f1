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


"""Unittests for closed 3-manifold checks and homology spheres."""

import itertools
import unittest

import semistable
from semistable.linalg import IntegerHomology
from semistable.topology import DeltaComplex, check_closed_3_manifold, integer_homology, is_homology_3_sphere
from semistable.zoo.threefolds import freudenthal_torus

SPHERE = list(itertools.combinations(range(5), 4))


def shifted(tetrahedra, offset):
    return [tuple(v + offset if v else 0 for v in t) for t in tetrahedra]


class TestClosedManifold(unittest.TestCase):
    def test_sphere(self):
        g = DeltaComplex.from_simplices(SPHERE)
        self.assertEqual(g.f_vector(), (5, 10, 10, 5))
        self.assertTrue(check_closed_3_manifold(g).ok)
        report = is_homology_3_sphere(g)
        self.assertTrue(report.is_sphere)
        self.assertEqual(report.h1, IntegerHomology(0))
        self.assertIn('simple connectedness', report.caveat)

    def test_three_torus(self):
        g = DeltaComplex.from_simplices(freudenthal_torus(3))
        self.assertEqual(g.f_vector(), (27, 189, 324, 162))
        self.assertTrue(g.is_simplicial())
        self.assertTrue(check_closed_3_manifold(g).ok)
        report = is_homology_3_sphere(g)
        self.assertFalse(report.is_sphere)
        self.assertEqual(report.homology, (IntegerHomology(1), IntegerHomology(3), IntegerHomology(3),
                                           IntegerHomology(1)))

    def test_dimension(self):
        verdict = check_closed_3_manifold(DeltaComplex.from_simplices(itertools.combinations(range(4), 3)))
        self.assertFalse(verdict.ok)
        self.assertEqual(verdict.clause, 'dimension')
        self.assertIsNone(verdict.cell)

    def test_triangle_cofaces(self):
        g = DeltaComplex.from_simplices(SPHERE[:-1])
        verdict = check_closed_3_manifold(g)
        self.assertEqual(verdict.clause, 'triangle-cofaces')
        # Triangles through vertex 0 come first and all lie in two of the remaining tetrahedra.
        self.assertEqual(verdict.cell, (2, 6))
        self.assertEqual(g.labels[0], (0, 1, 2, 3, 4))

    def test_vertex_link(self):
        # Two 3-spheres sharing vertex 0.
        g = DeltaComplex.from_simplices(SPHERE + shifted(SPHERE, 4))
        verdict = check_closed_3_manifold(g)
        self.assertFalse(verdict.ok)
        self.assertEqual(verdict.clause, 'vertex-link')
        self.assertEqual(verdict.cell, (0, 0))

    def test_connected(self):
        g = DeltaComplex.from_simplices(SPHERE + [tuple(v + 5 for v in t) for t in SPHERE])
        verdict = check_closed_3_manifold(g)
        self.assertEqual(verdict.clause, 'connected')
        self.assertEqual(integer_homology(g)[0], IntegerHomology(2))

    def test_homology_sphere_needs_manifold(self):
        with self.assertRaises(semistable.PreconditionError):
            is_homology_3_sphere(DeltaComplex.from_simplices(SPHERE[:-1]))


if __name__ == '__main__':
    unittest.main()
