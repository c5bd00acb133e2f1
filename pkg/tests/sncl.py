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


"""Unittests for configurations, local validation and the Type I, II and III classification."""

import unittest

from parameterized import parameterized

import semistable
from semistable.constants import ComponentTag, CurveRole, DegenerationType, SurfaceTag
from semistable.random import Generator, relabel_configuration
from semistable.sncl import (Component, ComponentKind, Configuration, DoubleCurve, Side, TransferOverride, TriplePoint,
                             check_structure, classify, dual_complex, dual_graph, stratum_tables, validate_local)
from semistable.sncl.local import _is_cycle
from semistable.zoo import surfaces

K3 = ComponentTag.K3
RATIONAL = ComponentTag.RATIONAL
ON_RATIONAL = CurveRole.ELLIPTIC_ON_RATIONAL


def two_rational(genus: int = 1, role: CurveRole = ON_RATIONAL, **kwargs) -> Configuration:
    return Configuration(K3, [Component.of('Y0', RATIONAL), Component.of('Y1', RATIONAL)],
                         [DoubleCurve('C0', genus, Side('Y0', role), Side('Y1', role))], **kwargs)


class TestComponentKind(unittest.TestCase):
    def test_tables(self):
        self.assertEqual(ComponentKind(K3).betti, (1, 0, 22, 0, 1))
        self.assertEqual(ComponentKind(ComponentTag.ENRIQUES).coherent, (1, 0, 0))
        self.assertEqual(ComponentKind(RATIONAL).betti, (1, 0, 1, 0, 1))
        self.assertEqual(ComponentKind(RATIONAL, 10).betti, (1, 0, 10, 0, 1))
        self.assertEqual(ComponentKind(ComponentTag.ELLIPTIC_RULED).betti[2], 2)

    def test_b2_declared(self):
        self.assertTrue(ComponentKind(K3).b2_declared)
        self.assertFalse(ComponentKind(RATIONAL).b2_declared)
        self.assertTrue(ComponentKind(RATIONAL, 3).b2_declared)


class TestConfiguration(unittest.TestCase):
    def test_lookup(self):
        c = surfaces.k3_chain(3)
        self.assertEqual(c.component('Y1').tag, ComponentTag.ELLIPTIC_RULED)
        self.assertEqual([x.id for x in c.curves_on('Y1')], ['C0', 'C1'])
        self.assertEqual(c.curve('C0').other('Y0'), 'Y1')
        self.assertEqual(c.curve('C0').side_on('Y1').role, CurveRole.RULING)
        self.assertEqual(c.canonical_order, 1)

    def test_canonical_order_default(self):
        self.assertEqual(surfaces.enriques_chain(2).canonical_order, 2)
        self.assertEqual(surfaces.bielliptic_klein().canonical_order, 2)

    def test_replace_and_equality(self):
        c = surfaces.k3_chain(3)
        self.assertEqual(c, surfaces.k3_chain(3))
        self.assertNotEqual(c, c.replace(field_char=2))
        self.assertEqual(hash(c), hash(surfaces.k3_chain(3)))
        self.assertEqual(c.replace(name='other').components, c.components)

    def test_transfers_are_frozen(self):
        c = two_rational(transfers=[TransferOverride('Y0', 'C0', [[1, 0], [0, 1]])])
        self.assertEqual(c.transfers[0].betti, ((1, 0), (0, 1)))
        self.assertIsNone(c.transfers[0].coherent)

    def test_structure(self):
        for c in (surfaces.k3_chain(4), surfaces.k3_tetrahedron(), surfaces.bielliptic_klein()):
            check_structure(c)

    @parameterized.expand([
        ('class', dict(surface_class=RATIONAL), 'surface class Rational is not of Kodaira dimension 0'),
        ('empty', dict(components=(), double_curves=()), 'configuration has no components'),
        ('duplicate', dict(components=(Component.of('Y0', RATIONAL),) * 2, double_curves=()),
         "duplicate component id 'Y0'"),
        ('b2_minimum', dict(components=(Component.of('Y0', RATIONAL, 0), Component.of('Y1', RATIONAL))),
         'component Y0: b2 = 0 is below the minimum 1'),
        ('b2_fixed', dict(components=(Component.of('Y0', K3, 20),), double_curves=()),
         'component Y0: b2 of a K3 surface is fixed to 22'),
        ('genus', dict(double_curves=(DoubleCurve('C0', 2, Side('Y0', ON_RATIONAL), Side('Y1', ON_RATIONAL)),)),
         'double curve C0: genus 2 is not 0 or 1'),
        ('unknown', dict(double_curves=(DoubleCurve('C0', 1, Side('Y0', ON_RATIONAL), Side('Y9', ON_RATIONAL)),)),
         "double curve C0: unknown component 'Y9'"),
        ('loop', dict(double_curves=(DoubleCurve('C0', 1, Side('Y0', ON_RATIONAL), Side('Y0', ON_RATIONAL)),)),
         'double curve C0: both sides lie on Y0'),
        ('count', dict(double_curves=(DoubleCurve('C0', 1, Side('Y0', ON_RATIONAL), Side('Y1', ON_RATIONAL), 2),)),
         'double curve C0: triple_point_count 2 but 0 triple points list it'),
        ('flag', dict(transfers=(TransferOverride('Y0', 'C9'),)),
         'transfer override Y0 ⊃ C9 is not an incidence flag'),
        ('override_shape', dict(transfers=(TransferOverride('Y0', 'C0', [[1, 0]]),)),
         'transfer override Y0 ⊃ C0: betti matrix is not 2x0'),
        ('field', dict(field_char=4), 'Field characteristic must be 0 or a prime, got 4'),
    ])
    def test_structure_problems(self, name, changes, problem):
        with self.assertRaises(semistable.StructuralError) as ctx:
            check_structure(two_rational().replace(**changes))
        self.assertIn(problem, ctx.exception.problems, msg=name)

    def test_triple_point_problems(self):
        c = surfaces.k3_tetrahedron()
        p = c.triple_points[0]
        bad = TriplePoint(p.id, p.curves, (p.components[0], p.components[1], 'Y3'))
        with self.assertRaises(semistable.StructuralError) as ctx:
            check_structure(c.replace(triple_points=(bad,) + c.triple_points[1:]))
        self.assertEqual(ctx.exception.problems,
                         (f'triple point {p.id}: curves do not join the pairs of its components',))

    def test_override_shapes(self):
        c = surfaces.k3_chain(3)
        check_structure(c.replace(transfers=[TransferOverride('Y1', 'C0', [[1, 0], [0, 1]], [[1]])]))
        with self.assertRaises(semistable.StructuralError) as ctx:
            check_structure(c.replace(transfers=[TransferOverride('Y1', 'C0', [[1, 0]], [[1, 0]])]))
        self.assertEqual(ctx.exception.problems, ('transfer override Y1 ⊃ C0: betti matrix is not 2x2',
                                                  'transfer override Y1 ⊃ C0: coherent matrix is not 1x1'))


class TestDual(unittest.TestCase):
    def test_chain(self):
        gamma = dual_complex(surfaces.k3_chain(4))
        self.assertEqual(gamma.f_vector(), (4, 3))
        self.assertEqual(gamma.labels[1], ('C0', 'C1', 'C2'))

    def test_triangulation(self):
        gamma = dual_graph(surfaces.k3_tetrahedron())
        self.assertEqual(gamma.f_vector(), (4, 6, 4))
        self.assertTrue(gamma.chain_complex().is_complex())
        self.assertEqual(gamma.vertices_of(2, 0), (0, 1, 2))

    def test_disconnected(self):
        c = Configuration(K3, [Component.of('Y0', K3), Component.of('Y1', K3)])
        with self.assertRaises(semistable.StructuralError) as ctx:
            dual_graph(c)
        self.assertEqual(ctx.exception.problems, ('dual complex has 2 connected components',))


class TestStrata(unittest.TestCase):
    def test_chain(self):
        tables = stratum_tables(surfaces.k3_chain(3))
        self.assertEqual(tables.betti(0, 2), 22)
        self.assertEqual(tables.betti(1, 1), 4)
        self.assertEqual(tables.coherent(1, 1), 2)
        self.assertEqual(tables.coherent(0, 1), 1)
        self.assertEqual(tables.chi(0), 2)
        self.assertEqual(tables.chi(1), 0)
        self.assertEqual(tables.betti(2, 0), 0)

    def test_triangulation(self):
        tables = stratum_tables(surfaces.k3_tetrahedron())
        self.assertEqual(tables.betti(0, 2), 28)
        self.assertEqual(tables.betti(1, 0), 6)
        self.assertEqual(tables.betti(1, 1), 0)
        self.assertEqual(tables.betti(2, 0), 4)
        self.assertEqual(tables.betti(2, 1), 0)
        self.assertEqual(tables.stratum(3), {})


class TestLocal(unittest.TestCase):
    @parameterized.expand([
        ('k3_smooth', surfaces.smooth(K3), {'Y0': 'smooth'}),
        ('k3_chain', surfaces.k3_chain(3), {'Y0': '2a', 'Y1': '1a', 'Y2': '2a'}),
        ('enriques_chain', surfaces.enriques_chain(3), {'Y0': '2a', 'Y1': '1a', 'Y2': '1b'}),
        ('abelian_cycle', surfaces.abelian_cycle(2), {'Y0': '1a', 'Y1': '1a'}),
        ('tetrahedron', surfaces.k3_tetrahedron(), {f'Y{v}': '2b' for v in range(4)}),
    ])
    def test_cases(self, name, c, cases):
        report = validate_local(c)
        self.assertTrue(report.ok, msg=name)
        self.assertEqual({v.component: v.case for v in report.verdicts}, cases, msg=name)

    def test_genus_formula(self):
        report = validate_local(two_rational(genus=0))
        self.assertFalse(report.ok)
        self.assertEqual([v.clause for v in report.violations], ['role-side', 'role-side', 'genus-formula'])
        self.assertEqual(report.violations[-1].message, 'genus 0 curve carries 0 triple points, expected 2')
        self.assertIsNone(report.case('Y0'))
        self.assertEqual(len(report.all_violations), 5)

    def test_kodaira_zero_meets_others(self):
        c = Configuration(K3, [Component.of('Y0', K3), Component.of('Y1', RATIONAL)],
                          [DoubleCurve('C0', 1, Side('Y0', ON_RATIONAL), Side('Y1', ON_RATIONAL))])
        report = validate_local(c)
        self.assertFalse(report.ok)
        self.assertEqual(report.verdicts[0].violations[0].message, 'a K3 component cannot meet other components')
        self.assertEqual(report.case('Y1'), '2a')

    def test_disconnected(self):
        c = Configuration(K3, [Component.of('Y0', K3), Component.of('Y1', K3)], name='apart')
        report = validate_local(c)
        self.assertEqual([v.clause for v in report.violations], ['connected'])

    def test_rulings_on_rational(self):
        report = validate_local(two_rational(role=CurveRole.RULING))
        self.assertEqual({v.clause for v in report.all_violations}, {'role-side', 'paac'})

    def test_cycle_of_two_curves(self):
        cycle = CurveRole.CYCLE_MEMBER
        components = [Component.of(f'Y{v}', RATIONAL) for v in range(4)]
        curves = [DoubleCurve('A', 0, Side('Y0', cycle), Side('Y1', cycle)),
                  DoubleCurve('B', 0, Side('Y0', cycle), Side('Y2', cycle)),
                  DoubleCurve('D', 0, Side('Y1', cycle), Side('Y2', cycle)),
                  DoubleCurve('E', 0, Side('Y1', cycle), Side('Y3', cycle)),
                  DoubleCurve('F', 0, Side('Y0', cycle), Side('Y3', cycle))]
        p0 = TriplePoint('P0', ('A', 'B', 'D'), ('Y0', 'Y1', 'Y2'))
        closed = Configuration(K3, components, curves, [p0, TriplePoint('P1', ('A', 'B', 'D'), ('Y0', 'Y1', 'Y2'))])
        self.assertTrue(_is_cycle(closed, 'Y0', ['A', 'B']))
        # The second point on Y0 lies on A and F, so A and B meet only once.
        apart = Configuration(K3, components, curves, [p0, TriplePoint('P1', ('A', 'F', 'E'), ('Y0', 'Y1', 'Y3'))])
        self.assertFalse(_is_cycle(apart, 'Y0', ['A', 'B']))

    def test_cycle_on_triangulation(self):
        c = surfaces.k3_tetrahedron()
        curves = [x.id for x in c.curves_on('Y0')]
        self.assertEqual(len(curves), 3)
        self.assertTrue(_is_cycle(c, 'Y0', curves))
        self.assertFalse(_is_cycle(c, 'Y0', curves[:2]))

    def test_structure_first(self):
        with self.assertRaises(semistable.StructuralError):
            validate_local(two_rational(genus=3))


class TestClassify(unittest.TestCase):
    @parameterized.expand([(x.value, x) for x in (K3, ComponentTag.ENRIQUES, ComponentTag.ABELIAN,
                                                  ComponentTag.BIELLIPTIC)])
    def test_smooth(self, name, cls):
        verdict = classify(surfaces.smooth(cls))
        self.assertEqual(verdict.type, DegenerationType.I)
        self.assertEqual(verdict.shape, 'smooth')
        self.assertIsNone(verdict.gamma)

    def test_smooth_kind_mismatch(self):
        verdict = classify(Configuration(K3, [Component.of('Y0', ComponentTag.ENRIQUES)]))
        self.assertFalse(verdict.ok)
        self.assertEqual([x.name for x in verdict.failed], ['smooth-kind'])

    @parameterized.expand([
        ('k3_chain', surfaces.k3_chain, 'chain'),
        ('enriques_chain', surfaces.enriques_chain, 'chain'),
        ('abelian_cycle', surfaces.abelian_cycle, 'cycle'),
        ('bielliptic_chain', surfaces.bielliptic_chain, 'chain'),
        ('bielliptic_cycle', surfaces.bielliptic_cycle, 'cycle'),
    ])
    def test_type_two(self, name, build, shape):
        for n in range(2, 7):
            verdict = classify(build(n))
            self.assertEqual(verdict.type, DegenerationType.II, msg=f'{name} {n}')
            self.assertEqual(verdict.shape, shape)

    def test_abelian_chain_rejected(self):
        verdict = classify(surfaces.abelian_chain(3))
        self.assertIsNone(verdict.type)
        self.assertIsNone(verdict.shape)
        self.assertEqual(verdict.failed[0].message, 'dual graph is chain, expected cycle')

    def test_wrong_ends(self):
        verdict = classify(surfaces.k3_chain(3).replace(surface_class=ComponentTag.ENRIQUES))
        self.assertEqual([x.name for x in verdict.failed], ['ends'])

    @parameterized.expand([
        ('k3_tetrahedron', surfaces.k3_tetrahedron, SurfaceTag.SPHERE),
        ('k3_icosahedron', surfaces.k3_icosahedron, SurfaceTag.SPHERE),
        ('abelian_csaszar', surfaces.abelian_csaszar, SurfaceTag.TORUS),
        ('abelian_torus_grid', surfaces.abelian_torus_grid, SurfaceTag.TORUS),
        ('enriques_rp2', surfaces.enriques_rp2, SurfaceTag.REAL_PROJECTIVE_PLANE),
        ('bielliptic_klein', surfaces.bielliptic_klein, SurfaceTag.KLEIN_BOTTLE),
    ])
    def test_type_three(self, name, build, tag):
        verdict = classify(build())
        self.assertEqual(verdict.type, DegenerationType.III)
        self.assertEqual(verdict.shape, 'triangulation')
        self.assertEqual(verdict.gamma.tag, tag)

    def test_gamma_mismatch(self):
        verdict = classify(surfaces.k3_tetrahedron().replace(surface_class=ComponentTag.ABELIAN))
        self.assertIsNone(verdict.type)
        self.assertEqual(verdict.failed[0].message, 'dual complex is Sphere, expected Torus')

    def test_passing_clause_messages(self):
        for c in (surfaces.smooth(K3), surfaces.k3_chain(2), surfaces.enriques_chain(3), surfaces.bielliptic_cycle(3),
                  surfaces.k3_tetrahedron()):
            verdict = classify(c)
            self.assertTrue(verdict.ok, msg=c.name)
            for clause in verdict.diagnostics:
                self.assertTrue(clause.message, msg=clause.name)
                self.assertNotIn('[]', clause.message, msg=clause.name)
                self.assertNotIn('expected', clause.message, msg=clause.name)
                self.assertNotIn(' not ', clause.message, msg=clause.name)
        messages = {x.name: x.message for x in classify(surfaces.k3_tetrahedron()).diagnostics}
        self.assertEqual(messages['gamma-surface'], 'dual complex is Sphere')
        messages = {x.name: x.message for x in classify(surfaces.k3_chain(3)).diagnostics}
        self.assertEqual(messages['inner-rulings'], 'every inner component is elliptic ruled with two rulings')

    def test_invalid_input(self):
        with self.assertRaises(semistable.PreconditionError):
            classify(two_rational(genus=0))

    def test_relabel_invariance(self):
        generator = Generator(7)
        for c in (surfaces.k3_chain(4), surfaces.bielliptic_cycle(3), surfaces.enriques_rp2()):
            expected = classify(c)
            for _ in range(3):
                verdict = classify(relabel_configuration(c, generator))
                self.assertEqual(verdict.type, expected.type)
                self.assertEqual(verdict.shape, expected.shape)
                self.assertEqual(verdict.gamma, expected.gamma)


if __name__ == '__main__':
    unittest.main()
