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


"""Unittests for the command line front end."""

import contextlib
import io
import json
import os
import tempfile
import unittest

from parameterized import parameterized

from semistable import cli
from semistable.constants import ComponentTag, CurveRole
from semistable.io import load, save, to_document
from semistable.sncl import Component, Configuration, DoubleCurve, Side
from semistable.threefold import Component3, Configuration3
from semistable.zoo import example


def run(*argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = cli.main(list(argv))
    return code, out.getvalue()


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def fixture(self, name, *size):
        path = os.path.join(self.tmp.name, f'{name}.json')
        code, _ = run('examples', name, *map(str, size), '--output', path)
        self.assertEqual(code, cli.EXIT_OK)
        return path

    def json_report(self, *argv):
        code, out = run('--format', 'json', *argv)
        return code, json.loads(out)

    @parameterized.expand([(0, 'I', 1, 1), (1, 'II', 2, 2), (2, 'III', 2, 3)])
    def test_neron(self, rank, kind, index_h1, index_h2):
        code, report = self.json_report('neron', '--rank', str(rank))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['type'], kind)
        self.assertEqual(report['abelian_rank'], 2 - rank)
        self.assertEqual((report['index_h1'], report['index_h2']), (index_h1, index_h2))

    def test_examples_stdout(self):
        code, out = run('examples', 'k3_tetrahedron')
        self.assertEqual(code, cli.EXIT_OK)
        doc = load(io.StringIO(out))
        self.assertEqual(doc.configuration.name, 'k3_tetrahedron')
        self.assertEqual(len(doc.configuration.components), 4)

    def test_examples_output(self):
        path = os.path.join(self.tmp.name, 'chain.json')
        code, report = self.json_report('examples', 'k3_chain', '4', '-o', path)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report, {'example': 'k3_chain', 'output': path})
        self.assertEqual(len(load(path).configuration.components), 4)

    def test_classify(self):
        code, report = self.json_report('classify', self.fixture('k3_chain', 3))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['type'], 'II')
        self.assertEqual(report['monodromy_index'], 2)
        self.assertEqual(report['coherent_h'], [1, 0, 1])
        self.assertTrue(report['accepted']['ok'])
        self.assertTrue(report['agreement']['ok'])

    @parameterized.expand([
        ('abelian_csaszar', 'III', 3, 'Torus'),
        ('enriques_rp2', 'III', 3, 'RealProjectivePlane'),
        ('k3_tetrahedron', 'III', 3, 'Sphere'),
    ])
    def test_classify_type_three(self, name, kind, index, gamma):
        code, report = self.json_report('classify', self.fixture(name))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual((report['type'], report['monodromy_index']), (kind, index))
        self.assertEqual(report['gamma']['tag'], gamma)

    def test_classify_smooth(self):
        code, report = self.json_report('classify', self.fixture('k3_smooth'))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual((report['type'], report['monodromy_index']), ('I', 1))

    def test_validate_genus_formula(self):
        path = os.path.join(self.tmp.name, 'genus.json')
        save(path, Configuration(ComponentTag.K3, [Component.of('Y0', ComponentTag.RATIONAL),
                                                   Component.of('Y1', ComponentTag.RATIONAL)],
                                 [DoubleCurve('C0', 0, Side('Y0', CurveRole.ELLIPTIC_ON_RATIONAL),
                                              Side('Y1', CurveRole.ELLIPTIC_ON_RATIONAL))]))
        code, report = self.json_report('validate', path)
        self.assertEqual(code, cli.EXIT_FAIL)
        self.assertIn('genus-formula', [x['clause'] for x in report['violations']])
        code, _ = run('validate', self.fixture('abelian_csaszar'))
        self.assertEqual(code, cli.EXIT_OK)

    def test_classify_rejected(self):
        code, _ = run('classify', self.fixture('abelian_chain'))
        self.assertEqual(code, cli.EXIT_FAIL)

    def test_spectral(self):
        code, report = self.json_report('spectral', self.fixture('k3_chain', 3))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['monodromy_index'], 2)
        self.assertTrue(report['abutment_ok']['ok'])
        self.assertTrue(report['wm_symmetry']['ok'])
        e2 = {row['t']: row for row in report['E2']}
        self.assertEqual(e2[2]['s=0'], 18)

    def test_spectral_without_wmc(self):
        code, report = self.json_report('--no-wmc', 'spectral', self.fixture('k3_chain', 3))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertTrue(report['wm_symmetry'].startswith('not judged'))

    def test_cover(self):
        code, report = self.json_report('cover', self.fixture('enriques_chain', 3))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['degree'], 2)
        self.assertEqual((report['total_type'], report['base_type']), ('II', 'II'))
        self.assertTrue(report['type_transfer']['ok'])

    def test_cover_missing(self):
        code, report = self.json_report('cover', self.fixture('k3_chain', 3))
        self.assertEqual(code, cli.EXIT_FAIL)
        self.assertEqual(report['error'], 'The configuration has no cover section')

    def test_threefold(self):
        path = self.fixture('cy3_simplex_boundary')
        code, report = self.json_report('validate', path)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['strata'], [5, 10, 10, 5])
        code, report = self.json_report('cy3', path)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['type'], 'IV')

    def test_wrong_dimension(self):
        code, _ = run('cy3', self.fixture('k3_chain', 3))
        self.assertEqual(code, cli.EXIT_FAIL)
        code, _ = run('classify', self.fixture('three_torus'))
        self.assertEqual(code, cli.EXIT_FAIL)

    def test_parse_errors(self):
        path = os.path.join(self.tmp.name, 'broken.json')
        with open(path, 'w') as f:
            f.write('{"meta": ')
        code, report = self.json_report('validate', path)
        self.assertEqual(code, cli.EXIT_PARSE)
        self.assertTrue(report['error'].startswith('Invalid JSON'))
        code, _ = run('validate', os.path.join(self.tmp.name, 'missing.json'))
        self.assertEqual(code, cli.EXIT_PARSE)

    @parameterized.expand([(name,) for name in ('enriques_smooth', 'enriques_chain', 'enriques_rp2',
                                                'bielliptic_smooth', 'bielliptic_cycle', 'bielliptic_chain',
                                                'bielliptic_klein')])
    def test_classify_without_cover(self, name):
        path = os.path.join(self.tmp.name, f'{name}_bare.json')
        save(path, example(name).configuration)
        code, report = self.json_report('classify', path)
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['index_carrier'], 'configuration')
        self.assertTrue(report['agreement'].startswith('not judged'))
        code, report = self.json_report('classify', self.fixture(name))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(report['index_carrier'], 'canonical-cover')
        self.assertTrue(report['agreement']['ok'])

    def test_override_shape_rejected(self):
        data = to_document(example('enriques_chain'))
        data['transfers'] = {'overrides': [{'component': 'Y1', 'curve': 'C0', 'betti': [[1, 0]]}]}
        path = os.path.join(self.tmp.name, 'override.json')
        with open(path, 'w') as f:
            json.dump(data, f)
        for command in ('validate', 'spectral', 'classify'):
            code, report = self.json_report(command, path)
            self.assertEqual(code, cli.EXIT_PARSE, command)
            self.assertIn('transfer override Y1 ⊃ C0: betti matrix is not 2x2', report['problems'])

    def test_validate_threefold_checks(self):
        code, report = self.json_report('validate', self.fixture('cy3_simplex_boundary'))
        self.assertEqual(code, cli.EXIT_OK)
        for key in ('maximal_intersection', 'vertex_links', 'anticanonical'):
            self.assertTrue(report[key]['ok'], key)
        path = os.path.join(self.tmp.name, 'lonely.json')
        save(path, Configuration3([Component3('Y0')], name='lonely'))
        code, report = self.json_report('validate', path)
        self.assertEqual(code, cli.EXIT_FAIL)
        self.assertEqual(report['maximal_intersection'], {'ok': False, 'detail': 'Y0'})
        self.assertFalse(report['anticanonical']['ok'])
        self.assertTrue(report['vertex_links']['ok'])

    @parameterized.expand([
        ('classify', 'enriques_rp2'),
        ('spectral', 'k3_chain'),
        ('cover', 'bielliptic_klein'),
        ('cy3', 'cy3_simplex_boundary'),
    ])
    def test_json_is_byte_stable(self, command, name):
        path = self.fixture(name)
        _, first = run('--format', 'json', command, path)
        _, second = run('--format', 'json', command, path)
        self.assertEqual(first, second)
        self.assertEqual(first, json.dumps(json.loads(first), sort_keys=True, indent=2, ensure_ascii=False) + '\n')
        self.assertEqual(run('examples', name)[1], run('examples', name)[1])

    def test_bad_arguments(self):
        with self.assertRaises(SystemExit) as e:
            run('examples', 'k3_nowhere')
        self.assertEqual(e.exception.code, 2)
        with self.assertRaises(SystemExit):
            run('neron', '--rank', '3')


if __name__ == '__main__':
    unittest.main()
