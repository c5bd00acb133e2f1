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


"""Unittests for report rendering."""

import io
import json
import unittest
from fractions import Fraction
from typing import NamedTuple

from semistable.constants import ComponentTag, DegenerationType, ReportFormat
from semistable.report import Report, ReportWriter, plain


class Pair(NamedTuple):
    left: int
    right: Fraction


class TestReport(unittest.TestCase):
    def test_plain(self):
        self.assertEqual(plain(DegenerationType.III), 'III')
        self.assertEqual(plain(ComponentTag.ELLIPTIC_RULED), 'EllipticRuled')
        self.assertEqual(plain(Fraction(1, 2)), '1/2')
        self.assertEqual(plain(Pair(1, Fraction(3))), {'left': 1, 'right': '3'})
        self.assertEqual(plain({(0, 1): (2, 3)}), {'[0, 1]': [2, 3]})
        self.assertIsNone(plain(None))
        self.assertIs(plain(True), True)

    def test_ok(self):
        report = Report()
        report.value('type', DegenerationType.II)
        self.assertTrue(report.ok)
        report.check('local', True)
        self.assertTrue(report.ok)
        report.check('cover', False, 'degree 3')
        self.assertFalse(report.ok)

    def test_text(self):
        report = Report()
        report.value('h', (1, 0, 1))
        report.check('local', False, '2 violations')
        report.table('rows', [{'t': 0, 's=0': 3}])
        report.text('note', 'verbatim')
        self.assertEqual(report(), 'h: [1, 0, 1]\nlocal: FAIL (2 violations)\nrows:\n  t=0, s=0=3\nnote: verbatim\n')

    def test_json(self):
        report = Report()
        report.value('type', DegenerationType.I)
        report.check('local', True)
        report.table('rows', [Pair(1, Fraction(1, 3))])
        report.text('note', 'skipped')
        self.assertEqual(json.loads(report(ReportFormat.JSON)), {
            'type': 'I', 'local': {'ok': True, 'detail': ''}, 'rows': [{'left': 1, 'right': '1/3'}], 'note': 'skipped'})
        self.assertEqual(report('json'), report(ReportFormat.JSON))

    def test_writer(self):
        stream = io.StringIO()
        report = Report()
        report.check('accepted', True)
        with ReportWriter('text', stream) as writer:
            writer.write(report)
        self.assertEqual(stream.getvalue(), 'accepted: PASS\n')


if __name__ == '__main__':
    unittest.main()
