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


"""Unittests for semistable.util."""

import unittest

import semistable


class TestUtil(unittest.TestCase):
    def test_duplicates(self):
        self.assertEqual(semistable.util.duplicates(['a', 'b', 'a', 'c', 'b', 'a']), ['a', 'b'])
        self.assertEqual(semistable.util.duplicates([]), [])
        self.assertEqual(semistable.util.duplicates(iter('xyz')), [])

    def test_index_map(self):
        self.assertEqual(semistable.util.index_map(['Y2', 'Y0', 'Y1']), {'Y2': 0, 'Y0': 1, 'Y1': 2})
        self.assertEqual(semistable.util.index_map((x for x in range(3))), {0: 0, 1: 1, 2: 2})


if __name__ == '__main__':
    unittest.main()
