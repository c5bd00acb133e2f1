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


"""Command line front end.

Every subcommand prints a report on stdout and exits with 0 when every check passed, 1 on a semantic failure
and 2 when the input could not be parsed.
"""

__all__ = ['EXIT_FAIL', 'EXIT_OK', 'EXIT_PARSE', 'build_parser', 'main']

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from semistable._version import __version__
from semistable.constants import ReportFormat
from semistable.covers import CoverMap, check_euler_multiplicativity, check_type_transfer, validate_cover
from semistable.errors import ConfigurationFileError, MissingTemplateError, PreconditionError, StructuralError
from semistable.io import ConfigFile, load, save
from semistable.linalg import nilpotency_index
from semistable.neron import UniformizationDatum, monodromy_on_h1, monodromy_on_h2, type_from_rank
from semistable.report import Report, ReportWriter
from semistable.sncl import Configuration, classify, dual_graph, validate_local
from semistable.spectral import (COVERED_CLASSES, SpectralPage, check_chi_flatness, check_logarithmic_class,
                                 coherent_cohomology, weight_analysis)
from semistable.threefold import (Configuration3, check_anticanonical_connectedness, check_maximal_intersection,
                                  check_vertex_links, classify_cy4, cube_verdict)
from semistable.topology import classify_surface, homology
from semistable.zoo import EXAMPLES, example

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2

logger = logging.getLogger(__name__)


def _exit_code(report: Report) -> int:
    return EXIT_OK if report.ok else EXIT_FAIL


def _with_overrides(doc: ConfigFile, args: argparse.Namespace) -> ConfigFile:
    """Applies --field-char and --wmc to the configuration and to both sides of its cover."""
    changes = {}
    if args.field_char is not None and isinstance(doc.configuration, Configuration):
        changes['field_char'] = args.field_char
    if args.wmc is not None:
        changes['wmc_assumed'] = args.wmc
    if not changes:
        return doc
    c = doc.configuration.replace(**changes)
    m = doc.cover
    if m is not None:
        m = CoverMap(m.degree, m.total.replace(**changes), c, m.component_map, m.curve_map, m.triple_point_map)
    return ConfigFile(c, m)


def _surface(doc: ConfigFile) -> Configuration:
    if not isinstance(doc.configuration, Configuration):
        raise PreconditionError('This command needs a surface configuration', ['dimension 3'])
    return doc.configuration


def _page_rows(page: SpectralPage) -> List[Dict[str, int]]:
    return [{'t': t, **{f's={s}': d for s, d in sorted(page.row(t).items())}} for t in page.rows]


def _threefold_boundary_checks(c: Configuration3, report: Report):
    links = check_vertex_links(c)
    report.check('vertex_links', all(x.ok for x in links), ', '.join(x.component for x in links if not x.ok))
    boundary = check_anticanonical_connectedness(c)
    report.check('anticanonical', all(x.ok for x in boundary), ', '.join(x.component for x in boundary if not x.ok))


def cmd_validate(doc: ConfigFile, report: Report) -> int:
    c = doc.configuration
    report.value('name', c.name)
    if isinstance(c, Configuration3):
        report.value('dimension', 3)
        report.value('strata', [len(c.components), len(c.double_surfaces), len(c.triple_curves),
                                len(c.quadruple_points)])
        intersection = check_maximal_intersection(c)
        report.check('maximal_intersection', intersection.every_component, ', '.join(intersection.missing))
        _threefold_boundary_checks(c, report)
        return _exit_code(report)
    report.value('class', c.surface_class)
    local = validate_local(c)
    report.table('components', [{'component': v.component, 'case': v.case} for v in local.verdicts])
    report.table('violations', local.all_violations)
    report.check('local', local.ok, f'{len(local.all_violations)} violations')
    if doc.cover is not None:
        verdict = validate_cover(doc.cover)
        report.table('cover_violations', verdict.violations)
        report.check('cover', verdict.ok, f'degree {doc.cover.degree} over {c.name or "base"}')
    return _exit_code(report)


def cmd_classify(doc: ConfigFile, report: Report) -> int:
    c = _surface(doc)
    report.value('name', c.name)
    report.value('class', c.surface_class)
    local = validate_local(c)
    if not local.ok:
        report.table('violations', local.all_violations)
        report.check('local', False, 'classification needs a locally valid configuration')
        return EXIT_FAIL
    verdict = classify(c)
    report.value('type', verdict.type)
    report.value('shape', verdict.shape)
    gamma_complex = dual_graph(c)
    report.value('gamma', verdict.gamma or classify_surface(gamma_complex))
    report.value('gamma_homology', homology(gamma_complex, c.field_char))
    report.table('clauses', verdict.diagnostics)
    report.check('accepted', verdict.ok, ', '.join(x.name for x in verdict.failed))
    analysis = weight_analysis(c, cover=doc.cover)
    report.value('monodromy_index', analysis.index)
    report.value('index_carrier', analysis.carrier)
    try:
        report.value('coherent_h', coherent_cohomology(c).h)
    except PreconditionError as e:
        report.text('coherent_h', f'skipped: {e.args[0]}')
    if verdict.ok and doc.cover is None and c.surface_class in COVERED_CLASSES:
        # The index of an Enriques or bielliptic fibre is only meaningful on its canonical cover.
        report.text('agreement', f'not judged, no canonical cover (Type {verdict.type}, index {analysis.index} '
                                 f'read on the configuration)')
    elif verdict.ok:
        agree = verdict.type == analysis.type
        if not agree:
            logger.error('Classifier says Type %s but the monodromy index is %d', verdict.type, analysis.index)
        report.check('agreement', agree, f'Type {verdict.type} against index {analysis.index}')
    return _exit_code(report)


def cmd_spectral(doc: ConfigFile, report: Report) -> int:
    c = _surface(doc)
    analysis = weight_analysis(c, cover=doc.cover)
    report.value('name', c.name)
    report.table('E1', _page_rows(analysis.e1))
    report.table('E2', _page_rows(analysis.e2))
    report.value('monodromy_index', analysis.index)
    report.value('index_carrier', analysis.carrier)
    report.value('notes', analysis.e1.notes)
    report.table('abutment', analysis.abutment.entries)
    report.check('abutment_ok', analysis.abutment.ok)
    failures = [x for s in analysis.symmetry for x in s.failures]
    if c.wmc_assumed:
        report.check('wm_symmetry', not failures, f'{len(failures)} asymmetric pairs')
    else:
        report.text('wm_symmetry', f'not judged, weight monodromy not assumed ({len(failures)} asymmetric pairs)')
    return _exit_code(report)


def cmd_coherent(doc: ConfigFile, report: Report) -> int:
    c = _surface(doc)
    page = coherent_cohomology(c)
    log = check_logarithmic_class(c, page)
    chi = check_chi_flatness(c)
    report.value('name', c.name)
    report.value('h', page.h)
    report.table('E1', _page_rows(page.e1))
    report.table('clauses', log.clauses)
    report.check('logarithmic_class', log.ok, ', '.join(x.name for x in log.clauses if not x.ok))
    report.check('chi', chi.ok, f'χ = {chi.value}, expected {chi.expected}')
    return _exit_code(report)


def cmd_cover(doc: ConfigFile, report: Report) -> int:
    c = _surface(doc)
    if doc.cover is None:
        raise PreconditionError('The configuration has no cover section', [c.name])
    m = doc.cover
    report.value('degree', m.degree)
    report.value('total', m.total.name)
    report.value('base', c.name)
    verdict = validate_cover(m)
    report.table('violations', verdict.violations)
    report.check('cover', verdict.ok)
    euler = check_euler_multiplicativity(m)
    report.value('euler', euler)
    report.check('euler_multiplicative', euler.ok)
    if verdict.ok:
        transfer = check_type_transfer(m)
        report.value('total_type', transfer.total.type)
        report.value('base_type', transfer.base.type)
        report.check('type_transfer', transfer.ok)
    return _exit_code(report)


def cmd_neron(rank: int, report: Report) -> int:
    d = UniformizationDatum(rank)
    report.value('torus_rank', d.torus_rank)
    report.value('abelian_rank', d.abelian_rank)
    report.value('index_h1', nilpotency_index(monodromy_on_h1(d)))
    report.value('index_h2', nilpotency_index(monodromy_on_h2(d)))
    report.value('type', type_from_rank(d))
    return EXIT_OK


def cmd_cy3(doc: ConfigFile, report: Report) -> int:
    c = doc.configuration
    if not isinstance(c, Configuration3):
        raise PreconditionError('This command needs a threefold configuration', ['dimension 2'])
    verdict = classify_cy4(c)
    report.value('name', c.name)
    report.value('type', verdict.type)
    report.value('simplicial', verdict.simplicial)
    report.table('clauses', verdict.clauses)
    report.check('accepted', verdict.ok, ', '.join(x.name for x in verdict.clauses if not x.ok))
    if verdict.sphere is not None:
        report.value('homology', verdict.sphere.homology)
        report.text('caveat', verdict.caveat)
        cube = cube_verdict(c)
        report.value('e2_30', cube.e2_30)
        report.value('n3_nonzero', cube.n3_nonzero)
    _threefold_boundary_checks(c, report)
    return _exit_code(report)


def cmd_examples(name: str, size: Optional[int], output: Optional[str], report: Report) -> int:
    doc = example(name, size)
    if output is None:
        save(sys.stdout, doc)
        return EXIT_OK
    save(output, doc)
    report.value('example', name)
    report.value('output', output)
    return EXIT_OK


FILE_COMMANDS: Dict[str, Callable[[ConfigFile, Report], int]] = {
    'validate': cmd_validate,
    'classify': cmd_classify,
    'spectral': cmd_spectral,
    'coherent': cmd_coherent,
    'cover': cmd_cover,
    'cy3': cmd_cy3,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='semistable', description='Combinatorial semistable degenerations.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('--format', choices=[x.value for x in ReportFormat], default=ReportFormat.TEXT.value,
                        help='report format')
    parser.add_argument('--field-char', type=int, default=None, help='override the field characteristic of the file')
    parser.add_argument('--wmc', dest='wmc', action='store_true', default=None,
                        help='assume the weight monodromy conjecture')
    parser.add_argument('--no-wmc', dest='wmc', action='store_false', help='do not assume weight monodromy')
    parser.add_argument('-v', '--verbose', action='store_true', help='log debug messages to stderr')
    commands = parser.add_subparsers(dest='command', required=True)
    helps = {
        'validate': 'check structure, local constraints and the cover',
        'classify': 'match the Type I, II or III shapes and compare with the monodromy index',
        'spectral': 'weight spectral sequence pages, index, symmetry and abutment',
        'coherent': 'coherent cohomology of the special fibre',
        'cover': 'validate the cover section and transfer the type',
        'cy3': 'Type IV Calabi-Yau threefold checks',
    }
    for name, text in helps.items():
        commands.add_parser(name, help=text).add_argument('path', help='configuration file')
    neron = commands.add_parser('neron', help='monodromy of an abelian surface with a given torus rank')
    neron.add_argument('--rank', type=int, choices=(0, 1, 2), required=True, help='torus rank')
    examples = commands.add_parser('examples', help='write a fixture configuration')
    examples.add_argument('name', choices=sorted(EXAMPLES))
    examples.add_argument('size', type=int, nargs='?', default=None, help='number of components of sized examples')
    examples.add_argument('--output', '-o', default=None, help='output file, stdout when omitted')
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    report = Report()
    with ReportWriter(args.format) as writer:
        try:
            if args.command == 'neron':
                code = cmd_neron(args.rank, report)
            elif args.command == 'examples':
                code = cmd_examples(args.name, args.size, args.output, report)
                if args.output is None:
                    return code
            else:
                doc = _with_overrides(load(args.path), args)
                code = FILE_COMMANDS[args.command](doc, report)
        except ConfigurationFileError as e:
            logger.error('%s', e.args[0])
            report.text('error', e.args[0])
            report.value('problems', e.problems)
            code = EXIT_PARSE
        except (PreconditionError, MissingTemplateError, StructuralError) as e:
            logger.error('%s', e.args[0])
            report.text('error', e.args[0])
            report.value('details', e.args[1:])
            code = EXIT_FAIL
        except ValueError as e:
            logger.exception('Unexpected failure in %s', args.command)
            report.text('error', f'{type(e).__name__}: {e.args[0] if e.args else ""}')
            report.value('details', [str(x) for x in e.args[1:]])
            code = EXIT_FAIL
        writer.write(report)
    return code
