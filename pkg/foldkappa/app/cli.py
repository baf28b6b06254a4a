"""
FoldKappa command line interface

Reports are written to stdout as one JSON object per line; logs and the ``--pretty`` tables go to stderr.

Exit codes:
    0  success (PASS, FINDING, UPPER_BOUND_ONLY, OUT_OF_RANGE)
    1  at least one FAIL verdict
    2  usage error or invalid arguments
    3  I/O error

Examples::

    foldkappa gen --kind fq --n 4 --format edgelist
    foldkappa theta --kind fq --n 5 --g 3 --mode exact
    foldkappa ckappa --kind fq --n 8 --g 3 --mode upper
    foldkappa verify --suite lemmas --n 4..6
    foldkappa faultsim --kind fq --n 8 --faults 8 --trials 1000 --seed 7
"""

import functools
import logging
import sys
import time
from typing import Iterable, Optional, Tuple

import click
from pydantic import ValidationError

from foldkappa.app.conversions.files import save_text_file, to_json_line
from foldkappa.app.core import config
from foldkappa.app.core.exceptions import FoldKappaError
from foldkappa.app.graphs import closedform, cutfinder, extremal, faultsim, setcalc, topology, verify
from foldkappa.app.schemas.common import TopologyKindEnum
from foldkappa.app.schemas.report import Report, build_report
from foldkappa.app.schemas.search import SearchBudget
from foldkappa.version import VERSION


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3

KIND = click.Choice([kind.value for kind in TopologyKindEnum])


def handle_errors(func):
    """Map package errors to exit code 2 and I/O errors to exit code 3"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (FoldKappaError, ValidationError) as e:
            click.echo(f'Error: {e}', err=True)
            sys.exit(EXIT_USAGE)
        except OSError as e:
            click.echo(f'I/O error: {e}', err=True)
            sys.exit(EXIT_IO)
    return wrapper


def workers_option(func):
    return click.option('--workers', type=click.IntRange(min=1), envvar='FOLDKAPPA_WORKERS',
                        default=config.WORKERS, show_default=True,
                        help='Worker processes (falls back to FOLDKAPPA_WORKERS).')(func)


def budget_options(func):
    func = click.option('--max-expansions', type=click.IntRange(min=1), default=None,
                        help='Partial sets expanded per search branch.')(func)
    func = click.option('--wall-clock', type=click.FloatRange(min=0, min_open=True), default=None,
                        help='Wall clock ceiling in seconds.')(func)
    func = click.option('--max-union-size', type=click.IntRange(min=1), default=None,
                        help='Cap on |U| in the ckappa search (default n + 3).')(func)
    return func


def emit(reports: Iterable[Report], pretty: bool = False) -> int:
    """
    Write reports as JSON lines to stdout (and a table to stderr if ``pretty``).

    Returns:
        int: The exit code, 1 if any report failed.
    """
    code = EXIT_OK
    for report in reports:
        click.echo(to_json_line(report.to_json_dict()))
        if pretty:
            click.echo(f'{report.verdict.value:<17} {report.claim_id:<50} '
                       f'expected={report.expected} computed={report.computed}', err=True)
        if report.is_failure:
            code = EXIT_FAIL
    return code


@click.group()
@click.version_option(version=VERSION, prog_name='foldkappa')
@click.option('--verbose', '-v', is_flag=True, help='Log at DEBUG level to stderr.')
@click.option('--pretty', is_flag=True, help='Also print a human readable table to stderr.')
@click.pass_context
def cli(ctx: click.Context, verbose: bool, pretty: bool) -> None:
    """
    Component connectivity of hypercubes and folded hypercubes.
    """
    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if verbose else config.LOG_LEVEL,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    ctx.ensure_object(dict)
    ctx.obj['pretty'] = pretty


@cli.command()
@click.option('--kind', type=KIND, required=True, help='q (hypercube) or fq (folded hypercube).')
@click.option('--n', 'n', type=int, required=True, help='The dimension.')
@click.option('--format', 'fmt', type=click.Choice(['edgelist', 'json']), default='edgelist', show_default=True)
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='Output file (default stdout).')
@handle_errors
def gen(kind: str, n: int, fmt: str, out: Optional[str]) -> None:
    """Export a topology as an edge list or a JSON adjacency."""
    t = topology.build(kind, n)
    content = topology.edgelist_text(t) if fmt == 'edgelist' else topology.adjacency_json_text(t)
    if out is None:
        click.echo(content, nl=False)
    else:
        save_text_file(out, content)
        logger.info(f'Wrote {t} to {out}')


def _theta_expected(t: topology.Topology, g: int) -> Tuple[Optional[int], bool]:
    """The closed form value (or None) and whether (n, g) lies in its stated range"""
    if t.is_folded:
        if 1 <= g <= t.n + 2:
            return closedform.f(t.n, g), t.n >= 5
        return None, True
    if g <= 2 * t.n:
        return closedform.theta_qn_formula(t.n, g), True
    return None, True


@cli.command()
@click.option('--kind', type=KIND, required=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--g', 'g', type=int, required=True, help='The set size.')
@click.option('--mode', type=click.Choice(['exact', 'star', 'formula']), default='exact', show_default=True)
@budget_options
@workers_option
@click.pass_context
@handle_errors
def theta(ctx: click.Context, kind: str, n: int, g: int, mode: str, max_expansions: Optional[int],
          wall_clock: Optional[float], max_union_size: Optional[int], workers: int) -> None:
    """Minimum neighbourhood size over g-subsets."""
    started = time.perf_counter()
    t = topology.build(kind, n)
    parameters = {'kind': kind, 'n': n, 'g': g, 'mode': mode}
    if mode == 'exact':
        budget = SearchBudget(max_expansions=max_expansions, wall_clock_seconds=wall_clock, workers=workers)
        result = extremal.theta_exact(t, g, budget)
        expected, in_range = _theta_expected(t, g)
        report = build_report(claim_id=f'thm/theta/{kind}/n={n}/g={g}', parameters=parameters,
                              expected=expected, computed=result.value, certified=result.exhaustive,
                              in_range=in_range, witness={'set': result.witness}, started=started)
    elif mode == 'star':
        value = extremal.theta_star_upper(t, g)
        expected, _ = _theta_expected(t, g)
        report = build_report(claim_id=f'thm/theta/star/{kind}/n={n}/g={g}', parameters=parameters,
                              expected=expected, computed=value, certified=False,
                              witness={'set': setcalc.star_set(t, 0, g).to_list()}, started=started)
    else:
        family = 'f_n_g' if t.is_folded else 'theta_qn'
        value = closedform.formula_value(family, n, g)
        parameters['branch'] = value.branch
        report = build_report(claim_id=f'formula/{family}/n={n}/g={g}', parameters=parameters,
                              expected=None, computed=value.value, in_range=value.in_stated_domain,
                              started=started)
    ctx.exit(emit([report], pretty=ctx.obj['pretty']))


def _ckappa_expected(t: topology.Topology, g: int) -> Tuple[Optional[int], bool]:
    """The closed form for ckappa_(g+1) (or None) and whether (n, g) lies in its stated range"""
    if t.is_folded:
        if g == 1:
            return t.n + 1, True
        return closedform.f(t.n, g), t.n >= 8 and g <= t.n + 1
    try:
        return closedform.ckappa_qn_formula(t.n, g), True
    except FoldKappaError:
        return None, True


@cli.command()
@click.option('--kind', type=KIND, required=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--g', 'g', type=click.IntRange(min=1), required=True,
              help='Computes ckappa_(g+1), the smallest (g + 1)-component cut.')
@click.option('--mode', type=click.Choice(['exact', 'upper', 'formula']), default='exact', show_default=True)
@click.option('--theta-floor', is_flag=True, default=False,
              help='Prune the exact search with exact theta values as lower bounds on |N(U)|.')
@budget_options
@workers_option
@click.pass_context
@handle_errors
def ckappa(ctx: click.Context, kind: str, n: int, g: int, mode: str, theta_floor: bool,
           max_expansions: Optional[int], wall_clock: Optional[float], max_union_size: Optional[int],
           workers: int) -> None:
    """Smallest (g + 1)-component cut."""
    started = time.perf_counter()
    t = topology.build(kind, n)
    parameters = {'kind': kind, 'n': n, 'g': g, 'components': g + 1, 'mode': mode}
    if mode == 'upper':
        witness = cutfinder.star_cut(t, 0, g) if t.is_folded else cutfinder.leaf_cut(t, 0, g)
        expected, _ = _ckappa_expected(t, g)
        report = build_report(claim_id=f'thm/ckappa/upper/{kind}/n={n}/g={g}', parameters=parameters,
                              expected=expected, computed=witness.size, certified=False,
                              witness={'cut': witness.cut, 'sizes': witness.profile.sizes,
                                       'components_certified': witness.certified},
                              started=started)
    elif mode == 'exact':
        budget = SearchBudget(max_expansions=max_expansions, wall_clock_seconds=wall_clock,
                              max_union_size=max_union_size, workers=workers)
        floor = extremal.theta_floor(t, budget.union_cap(n), budget) if theta_floor else None
        outcome = cutfinder.ckappa_exact(t, g + 1, budget, theta_floor=floor)
        parameters['expansions'] = outcome.expansions
        expected, in_range = _ckappa_expected(t, g)
        report = build_report(claim_id=f'thm/ckappa/{kind}/n={n}/g={g}', parameters=parameters,
                              expected=expected, computed=outcome.value, certified=outcome.exhaustive,
                              in_range=in_range,
                              witness=outcome.cut_witness(),
                              started=started)
    else:
        family = 'f_n_g' if t.is_folded else 'ckappa_qn'
        value = closedform.formula_value(family, n, g)
        parameters['branch'] = value.branch
        report = build_report(claim_id=f'formula/{family}/n={n}/g={g}', parameters=parameters,
                              expected=None, computed=value.value, in_range=value.in_stated_domain,
                              started=started)
    ctx.exit(emit([report], pretty=ctx.obj['pretty']))


@cli.command(name='verify')
@click.option('--suite', type=click.Choice(list(verify.SUITES)), default='all', show_default=True)
@click.option('--n', 'n_range', default='4..5', show_default=True, help='A dimension or an inclusive range a..b.')
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--trials', type=click.IntRange(min=1), default=200, show_default=True,
              help='Random trials per randomized cell.')
@workers_option
@click.pass_context
@handle_errors
def verify_command(ctx: click.Context, suite: str, n_range: str, seed: int, trials: int, workers: int) -> None:
    """Run property suites and emit one report per claim."""
    dimensions = verify.parse_dimension_range(n_range)
    reports = verify.iter_suite(suite, dimensions, seed=seed, workers=workers, trials=trials)
    ctx.exit(emit(reports, pretty=ctx.obj['pretty']))


@cli.command(name='faultsim')
@click.option('--kind', type=KIND, required=True)
@click.option('--n', 'n', type=int, required=True)
@click.option('--faults', type=click.IntRange(min=0), multiple=True,
              help='Fault counts |F|; may be repeated.')
@click.option('--trials', type=click.IntRange(min=1), default=1000, show_default=True)
@click.option('--seed', type=click.IntRange(min=0), default=0, show_default=True)
@click.option('--g-max', type=click.IntRange(min=1), default=None,
              help='Also emit the threshold report for g = 1 ... g-max.')
@click.option('--out', type=click.Path(dir_okay=False), default=None, help='CSV output file (default stdout).')
@workers_option
@click.pass_context
@handle_errors
def faultsim_command(ctx: click.Context, kind: str, n: int, faults: Tuple[int, ...], trials: int, seed: int,
                     g_max: Optional[int], out: Optional[str], workers: int) -> None:
    """Random vertex fault injection, written as CSV."""
    t = topology.build(kind, n)
    if not faults and g_max is None:
        raise click.UsageError('Give at least one --faults value or --g-max')
    code = EXIT_OK
    if faults:
        content = faultsim.stats_csv(faultsim.simulate(t, count, trials, seed, workers=workers) for count in faults)
        if out is None:
            click.echo(content, nl=False)
        else:
            save_text_file(out, content)
    if g_max is not None:
        report = faultsim.threshold_report(t, g_max, trials, seed, workers=workers)
        if out is None and faults:
            # stdout already carries the CSV
            click.echo(to_json_line(report.to_json_dict()), err=True)
            code = EXIT_FAIL if report.is_failure else EXIT_OK
        else:
            code = emit([report], pretty=ctx.obj['pretty'])
    ctx.exit(code)


def main():
    cli(obj=dict())


if __name__ == '__main__':
    main()
