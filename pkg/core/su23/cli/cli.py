#  Copyright 2026 su23 contributors
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.
import logging
import sys
from typing import Optional, Tuple

import click

from su23.__version__ import SU23_VERSION
from su23.algebra.ff import make_field
from su23.algebra.linalg import Mat
from su23.common.json_helper import JsonHelper
from su23.common.logging_helper import LoggingHelper
from su23.exceptions.exceptions import BadParameter, FieldError, InvalidRunConfig, NoAdmissibleParameter, \
    UnsupportedCase
from su23.gens.builder import build_generators
from su23.gens.conditions import check_conditions
from su23.gens.gen_case import GenCase
from su23.gens.search import STRATEGIES, STRATEGY_HINTED, parse_parameter, search_parameter
from su23.gens.tables import tables_as_csv_rows, tables_as_dict
from su23.verify.matrix_runner import certify_cell, run_matrix, verify_cell, verify_field
from su23.verify.report_renderer import FORMAT_CSV, FORMAT_JSON, FORMAT_TEXT, FORMATS, render_csv, \
    render_report
from su23.verify.run_config import RunConfig
from su23.verify.run_config_parser import read_run_config_file
from su23.verify.verifier import SUITE_NAMES
from su23.verify.verify_report import MatrixReport

LoggingHelper.configure_for_cli()
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# input problems that are the caller's to fix
USAGE_ERRORS = (UnsupportedCase, BadParameter, FieldError, InvalidRunConfig)


def _emit(document: str, output: Optional[str]):
    if output:
        with open(output, 'w', encoding='utf-8') as f:
            f.write(document if document.endswith('\n') else document + '\n')
        logger.info(f'Wrote {output}')
    else:
        click.echo(document.rstrip('\n'))


def _matrix_text(name: str, matrix: Mat) -> str:
    cells = [[matrix.ctx.format(code) for code in row] for row in matrix.rows]
    width = max((len(cell) for row in cells for cell in row), default=1)
    return '\n'.join([f'{name} ='] + ['  ' + ' '.join(cell.rjust(width) for cell in row) for row in cells])


def _usage_error(e: Exception) -> int:
    logger.error(str(e))
    return EXIT_USAGE


@click.group(help=f"su23 CLI version {SU23_VERSION}")
@click.option('-v', '--verbose', count=True, help='Show debug logging on stderr')
@click.option('--quiet', is_flag=True, help='Log warnings and errors only')
def main(verbose: int, quiet: bool):
    LoggingHelper.set_verbosity(verbose, quiet)


@main.command(short_help='Build the generators x, y and the form J for one (n, q)')
@click.option('--n', 'n', type=int, required=True, help='Dimension, at least 8')
@click.option('--q', 'q', type=int, required=True, help='Prime power q of the field GF(q^2)')
@click.option('--a', 'a_text', default=STRATEGY_HINTED, show_default=True,
              help='hinted, exhaustive (or search), poly:c0,c1,... for a minimal polynomial over GF(p), '
                   'or c0,c1,... for the coordinates of a')
@click.option('--format', 'output_format', type=click.Choice([FORMAT_JSON, FORMAT_TEXT]), default=FORMAT_JSON,
              show_default=True)
@click.option('-o', '--output', required=False, default=None, help='Write to this file instead of stdout')
def gen(n: int, q: int, a_text: str, output_format: str, output: Optional[str]):
    """
    Builds x_n(a), y_n(a) and J_n and exports them; matrices act on columns.
    """
    exit_code = EXIT_OK
    try:
        case = GenCase.for_cell(n, q)
        triple = build_generators(case, parse_parameter(case, a_text))
        if output_format == FORMAT_TEXT:
            lines = [f'SU_{n}({q}^2) {case.tag}', f'field {triple.ctx}',
                     f'a = {triple.a}' if triple.a is not None else 'no parameter']
            lines += [_matrix_text(name, matrix) for name, matrix in (('x', triple.x), ('y', triple.y),
                                                                      ('J', triple.J))]
            lines += [f'note: {note}' for note in triple.notes]
            _emit('\n'.join(lines), output)
        else:
            _emit(JsonHelper.to_json_pretty(triple.to_dict()), output)
    except USAGE_ERRORS as e:
        exit_code = _usage_error(e)
    except NoAdmissibleParameter as e:
        exit_code = EXIT_FAILED
        logger.error(str(e))
    except Exception as e:
        exit_code = EXIT_FAILED
        logger.exception(f'Exception: {str(e)}')
    finally:
        logger.info(f'Exiting with code {exit_code}')
        sys.exit(exit_code)


@main.command(short_help='Search an admissible parameter a for one (n, q)')
@click.option('--n', 'n', type=int, required=True)
@click.option('--q', 'q', type=int, required=True)
@click.option('--strategy', type=click.Choice(list(STRATEGIES)), default=STRATEGY_HINTED, show_default=True)
@click.option('-o', '--output', required=False, default=None)
def search(n: int, q: int, strategy: str, output: Optional[str]):
    """
    Finds a parameter satisfying every condition of the case and prints it with the condition report.
    """
    exit_code = EXIT_OK
    try:
        case = GenCase.for_cell(n, q)
        a = search_parameter(case, strategy)
        document = {'case': case.to_dict(), 'strategy': strategy, 'a': a.to_jsonnable() if a is not None else None}
        if a is not None:
            document['a_text'] = repr(a)
            document['conditions'] = check_conditions(case, a).to_dict()
        _emit(JsonHelper.to_json_pretty(document), output)
    except USAGE_ERRORS as e:
        exit_code = _usage_error(e)
    except NoAdmissibleParameter as e:
        exit_code = EXIT_FAILED
        logger.error(str(e))
    except Exception as e:
        exit_code = EXIT_FAILED
        logger.exception(f'Exception: {str(e)}')
    finally:
        logger.info(f'Exiting with code {exit_code}')
        sys.exit(exit_code)


@main.command(short_help='Run the verification suites on one cell, a run matrix or the default matrix')
@click.option('--n', 'n', type=int, required=False, default=None)
@click.option('--q', 'q', type=int, required=False, default=None)
@click.option('--a', 'a_text', required=False, default=None, help='Parameter, as for gen')
@click.option('--all', 'all_cells', is_flag=True, default=False,
              help='Run the default matrix: n = 8..20 against q in 2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27')
@click.option('-c', '--config', 'config_file', required=False, default=None, help='Run matrix YAML file')
@click.option('--suite', 'suites', multiple=True, type=click.Choice(list(SUITE_NAMES)),
              help='Run only these suites; repeatable')
@click.option('--counts', is_flag=True, default=False, help='Also run the field checks for each q')
@click.option('--strategy', type=click.Choice(list(STRATEGIES)), default=STRATEGY_HINTED, show_default=True)
@click.option('--workers', type=int, default=1, show_default=True)
@click.option('--seed', type=int, default=None)
@click.option('--format', 'output_format', type=click.Choice(list(FORMATS)), default=FORMAT_TEXT,
              show_default=True)
@click.option('--timings', is_flag=True, default=False, help='Include elapsed times in the JSON report')
@click.option('-o', '--output', required=False, default=None)
def verify(n: Optional[int], q: Optional[int], a_text: Optional[str], all_cells: bool, config_file: Optional[str],
           suites: Tuple[str, ...], counts: bool, strategy: str, workers: int, seed: Optional[int],
           output_format: str, timings: bool, output: Optional[str]):
    """
    Runs every applicable check and prints a report. Exit code 0 means no check failed; excluded and
    unsupported cells do not count as failures.
    """
    single_cell = n is not None or q is not None
    if sum([all_cells, bool(config_file), single_cell]) != 1 or (single_cell and (n is None or q is None)):
        raise click.UsageError('Give exactly one of --n with --q, --all or --config')
    if a_text is not None and not single_cell:
        raise click.UsageError('--a needs a single cell')

    exit_code = EXIT_OK
    try:
        options = dict(strategy=strategy, workers=workers, seed=seed, suites=list(suites) or None)
        if all_cells:
            config = RunConfig.default_matrix(**options)
        elif config_file:
            config = read_run_config_file(config_file)
            if suites:
                config.suites = list(suites)
        else:
            config = RunConfig(cells=[(n, q)], counts=counts, **options)
        config.counts = config.counts or counts

        if a_text is not None:
            report = MatrixReport(cells=[verify_cell(n, q, a_text, strategy, config.suites, seed)])
            if counts:
                report.fields = [verify_field(q)]
        else:
            report = run_matrix(config)

        _emit(render_report(report, output_format, include_timings=timings), output)
        for cell in report.failed_cells():
            for failure in cell.get_check_failures():
                logger.info(f'  n={cell.n} q={cell.q} {failure}')
            for error in cell.errors:
                logger.error(f'  n={cell.n} q={cell.q} {error}')
        exit_code = EXIT_OK if report.is_passed() else EXIT_FAILED
    except USAGE_ERRORS as e:
        exit_code = _usage_error(e)
    except Exception as e:
        exit_code = EXIT_FAILED
        logger.exception(f'Verification failed: {str(e)}')
    finally:
        logger.info(f'Exiting with code {exit_code}')
        sys.exit(exit_code)


@main.command(short_help='Certify |<x,y>| = |SU_n(q^2)| with a randomized stabilizer chain')
@click.option('--n', 'n', type=int, required=True)
@click.option('--q', 'q', type=int, required=True)
@click.option('--budget-seconds', type=float, default=None,
              help='Time budget; defaults to SU23_BUDGET_SECONDS or the configured budget')
@click.option('--seed', type=int, default=None)
@click.option('-o', '--output', required=False, default=None)
def certify(n: int, q: int, budget_seconds: Optional[float], seed: Optional[int], output: Optional[str]):
    """
    Confirmed means the chain reached the expected order and passed its verification sifts. Unconfirmed
    results carry a reason: budget, stationary or too_large. A chain larger than expected fails.
    """
    exit_code = EXIT_OK
    try:
        GenCase.for_cell(n, q)
        report = certify_cell(n, q, budget_seconds=budget_seconds, seed=seed)
        _emit(JsonHelper.to_json_pretty(report.to_dict()), output)
        if report.result is not None and not report.result.is_confirmed():
            logger.warning(f'Order not confirmed: {report.result.reason}')
        exit_code = EXIT_OK if report.is_passed() else EXIT_FAILED
    except USAGE_ERRORS as e:
        exit_code = _usage_error(e)
    except Exception as e:
        exit_code = EXIT_FAILED
        logger.exception(f'Exception: {str(e)}')
    finally:
        logger.info(f'Exiting with code {exit_code}')
        sys.exit(exit_code)


@main.command(short_help='Dump the embedded parameter polynomials and word exponent tables')
@click.option('--format', 'output_format', type=click.Choice(list(FORMATS)), default=FORMAT_TEXT,
              show_default=True)
@click.option('-o', '--output', required=False, default=None)
def tables(output_format: str, output: Optional[str]):
    exit_code = EXIT_OK
    try:
        if output_format == FORMAT_JSON:
            document = JsonHelper.to_json_pretty(tables_as_dict())
        elif output_format == FORMAT_CSV:
            document = render_csv(('table', 'q', 'n', 'polynomial', 'word', 'exponents'), tables_as_csv_rows())
        else:
            lines = []
            for table, q, n_value, polynomial, word, exponents in tables_as_csv_rows():
                cell = f'q={q}' + (f' n={n_value}' if n_value != '' else '')
                lines.append('  '.join(part for part in (table, cell, polynomial, word, exponents) if part))
            document = '\n'.join(lines)
        _emit(document, output)
    except Exception as e:
        exit_code = EXIT_FAILED
        logger.exception(f'Exception: {str(e)}')
    finally:
        logger.info(f'Exiting with code {exit_code}')
        sys.exit(exit_code)


@main.command(short_help='Show the field GF(p^d) used for computations')
@click.option('--p', 'p', type=int, required=True)
@click.option('--d', 'd', type=int, required=True)
@click.option('--format', 'output_format', type=click.Choice([FORMAT_JSON, FORMAT_TEXT]), default=FORMAT_TEXT,
              show_default=True)
def field(p: int, d: int, output_format: str):
    exit_code = EXIT_OK
    try:
        ctx = make_field(p, d)
        document = {
            'p': ctx.p,
            'd': ctx.d,
            'order': ctx.order,
            'modulus': list(ctx.modulus),
            'primitive_element': ctx.format(ctx.primitive_element)
        }
        if output_format == FORMAT_JSON:
            _emit(JsonHelper.to_json_pretty(document), None)
        else:
            _emit('\n'.join(f'{key}: {value}' for key, value in document.items()), None)
    except USAGE_ERRORS as e:
        exit_code = _usage_error(e)
    except Exception as e:
        exit_code = EXIT_FAILED
        logger.exception(f'Exception: {str(e)}')
    finally:
        logger.info(f'Exiting with code {exit_code}')
        sys.exit(exit_code)
