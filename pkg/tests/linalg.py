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


"""Unittests for exact matrices, ranks and nilpotent operators."""

import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st
from parameterized import parameterized

import semistable
from semistable.linalg import (IntMatrix, Matrix, NilpotentOperator, check_field_char, jordan_operator,
                               nilpotency_index, rank, wedge_square)


class TestMatrix(unittest.TestCase):
    def test_entries_are_exact(self):
        m = Matrix([[Fraction(1, 2), 1], [2, Fraction(4, 2)]])
        self.assertEqual(m.entries, ((Fraction(1, 2), 1), (2, 2)))
        self.assertIsInstance(m.entries[1][1], int)
        with self.assertRaises(TypeError):
            Matrix([[0.5]])
        with self.assertRaises(TypeError):
            Matrix([[True]])

    def test_shape(self):
        self.assertEqual(Matrix([], shape=(0, 3)).shape, (0, 3))
        with self.assertRaises(ValueError):
            Matrix([[1, 2], [3]])

    def test_int_matrix_closure(self):
        a = IntMatrix([[1, 2], [3, 4]])
        self.assertIsInstance(a @ a, IntMatrix)
        self.assertIsInstance(a + a, IntMatrix)
        self.assertIsInstance(a * 3, IntMatrix)
        self.assertNotIsInstance(a @ Matrix([[Fraction(1, 2)], [0]]), IntMatrix)
        self.assertNotIsInstance(a * Fraction(1, 2), IntMatrix)
        with self.assertRaises(ValueError):
            IntMatrix([[Fraction(1, 3)]])

    def test_arithmetic(self):
        a = IntMatrix([[1, 2], [3, 4]])
        self.assertEqual(a @ IntMatrix.identity(2), a)
        self.assertEqual(a - a, IntMatrix.zeros(2, 2))
        self.assertEqual(-a, a * -1)
        self.assertEqual(a ** 2, IntMatrix([[7, 10], [15, 22]]))
        self.assertEqual(a.T, IntMatrix([[1, 3], [2, 4]]))
        self.assertEqual(Matrix([[Fraction(1, 2)]]) * 2, Matrix([[1]]))
        self.assertEqual(IntMatrix.zeros(2, 0) @ IntMatrix.zeros(0, 3), IntMatrix.zeros(2, 3))
        with self.assertRaises(ValueError):
            a @ IntMatrix.identity(3)

    def test_determinant(self):
        self.assertEqual(IntMatrix([[1, 2], [3, 4]]).determinant(), -2)
        self.assertEqual(Matrix([[Fraction(1, 2), 0], [0, 4]]).determinant(), 2)
        self.assertEqual(IntMatrix.zeros(0, 0).determinant(), 1)
        with self.assertRaises(ValueError):
            IntMatrix([[1, 2]]).determinant()

    def test_from_blocks(self):
        m = IntMatrix.from_blocks([1, 2], [2, 1], {(0, 0): IntMatrix([[1, 2]]), (1, 1): IntMatrix([[3], [4]])})
        self.assertEqual(m, IntMatrix([[1, 2, 0], [0, 0, 3], [0, 0, 4]]))
        with self.assertRaises(ValueError):
            IntMatrix.from_blocks([1], [1], {(0, 0): IntMatrix([[1, 2]])})

    def test_nonzero(self):
        self.assertEqual(list(IntMatrix([[0, 5], [-1, 0]]).nonzero()), [(0, 1, 5), (1, 0, -1)])

    def test_immutable(self):
        with self.assertRaises(ValueError):
            IntMatrix([[1]]).value[0, 0] = 2

    def test_hash(self):
        self.assertEqual(hash(IntMatrix([[1, 2]])), hash(IntMatrix([[1, 2]])))
        self.assertEqual(len({IntMatrix([[1, 2]]), IntMatrix([[1, 2]]), IntMatrix([[2, 1]])}), 2)


class TestRank(unittest.TestCase):
    @parameterized.expand([
        ('full', [[1, 2], [3, 4]], 0, 2),
        ('dependent', [[1, 2], [2, 4]], 0, 1),
        ('zero', [[0, 0]], 0, 0),
        ('mod2', [[2, 0], [0, 1]], 2, 1),
        ('mod3', [[1, 2], [2, 1]], 3, 1),
        ('mod5', [[1, 2], [2, 1]], 5, 2),
        ('fraction', [[Fraction(1, 2), 1], [1, 2]], 0, 1),
    ])
    def test_rank(self, name, rows, field_char, expected):
        self.assertEqual(rank(Matrix(rows), field_char), expected, msg=name)

    def test_empty(self):
        self.assertEqual(rank(Matrix([], shape=(0, 4))), 0)
        self.assertEqual(IntMatrix.zeros(3, 0).rank(), 0)

    def test_field_char(self):
        check_field_char(0)
        check_field_char(7)
        for p in (1, 4, -3):
            with self.assertRaises(ValueError):
                check_field_char(p)

    def test_undefined_mod_p(self):
        with self.assertRaises(ValueError):
            rank(Matrix([[Fraction(1, 2)]]), 2)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_rank_bounds(self, seed):
        generator = semistable.random.Generator(seed)
        m = semistable.random.integer_matrix((4, 5), generator=generator)
        r = rank(m)
        self.assertLessEqual(r, 4)
        self.assertEqual(rank(m.T), r)
        self.assertLessEqual(rank(m, 2), r)


class TestNilpotent(unittest.TestCase):
    @parameterized.expand([
        ('zero', [1, 1, 1], 1),
        ('one_block', [2, 1, 1], 2),
        ('two_blocks', [2, 2], 2),
        ('long_block', [3, 1], 3),
        ('full', [4], 4),
    ])
    def test_jordan_index(self, name, blocks, index):
        self.assertEqual(nilpotency_index(jordan_operator(blocks)), index, msg=name)

    @parameterized.expand([
        ('zero', [1, 1, 1, 1], 1),
        ('one_block', [2, 1, 1], 2),
        ('two_blocks', [2, 2], 3),
    ])
    def test_wedge_square_index(self, name, blocks, index):
        n = wedge_square(jordan_operator(blocks))
        self.assertEqual(n.dim, 6)
        self.assertEqual(nilpotency_index(n), index, msg=name)

    def test_wedge_square_of_two_block(self):
        # N e_2 = e_1 on a plane: the exterior square is one dimensional and N acts by zero.
        n = wedge_square(jordan_operator([2]))
        self.assertEqual(n.matrix, IntMatrix([[0]]))

    def test_not_nilpotent(self):
        with self.assertRaises(semistable.PreconditionError):
            nilpotency_index(NilpotentOperator(IntMatrix.identity(2)))

    def test_not_square(self):
        with self.assertRaises(ValueError):
            NilpotentOperator(IntMatrix([[0, 1]]))
        with self.assertRaises(ValueError):
            jordan_operator([2, 0])

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 10 ** 6), st.integers(0, 2))
    def test_conjugation_invariance(self, seed, torus_rank):
        # Monodromy on H^1 of an abelian surface with the given torus rank.
        n = jordan_operator([2] * torus_rank + [1] * (4 - 2 * torus_rank))
        p, p_inv = semistable.random.unimodular(4, generator=semistable.random.Generator(seed))
        self.assertEqual(p @ p_inv, IntMatrix.identity(4))
        conjugated = n.conjugate(p, p_inv)
        self.assertEqual(conjugated.rank(), torus_rank)
        self.assertEqual(nilpotency_index(wedge_square(conjugated)), torus_rank + 1)


if __name__ == '__main__':
    unittest.main()
