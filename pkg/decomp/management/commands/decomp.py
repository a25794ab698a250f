"""
``./manage.py decomp <command> TABLE [options]``

Commands: ``decompose``, ``chart``, ``check-fd``, ``check-mvd`` and ``verify``. Bound sets
and attribute lists are comma separated (``--bound x1,x4``).
"""
from pathlib import Path
from typing import Optional

import djclick as click
from django.core.management.base import CommandError
from pydantic import ValidationError

from forge.utils import split_names

from decomp.cli import EXIT_USAGE, run
from decomp.types import Algorithm, Encoding, McpMode, RunConfig

table_argument = click.argument('input_path', type=click.Path(exists=True, dir_okay=False))


def _finish(command: str, output: Optional[str] = None, **options) -> None:
    try:
        cfg = RunConfig(command=command, output_path=output, **options)
    except ValidationError as e:
        raise CommandError(str(e))
    result = run(cfg)
    if result.exit_code == EXIT_USAGE:
        raise CommandError(result.report.splitlines()[-1])
    if output:
        Path(output).write_text(result.report, encoding='utf-8')
    else:
        click.echo(result.report, nl=False)
    if result.exit_code:
        click.get_current_context().exit(result.exit_code)


@click.group()
def command():
    """Relational functional decomposition of truth tables."""


@command.command(name='decompose')
@table_argument
@click.option('--bound', multiple=True, required=True, help='bound set, repeat for several')
@click.option('--free', default=None, help='free set, defaults to the remaining inputs')
@click.option('--algorithm', type=click.Choice([a.value for a in Algorithm]), default='auto')
@click.option('--mcp', type=click.Choice([m.value for m in McpMode]), default='exact')
@click.option('--encoding', type=click.Choice([e.value for e in Encoding]), default='single')
@click.option('--extend-missing', is_flag=True, help="add absent input rows as don't-cares")
@click.option('--enumerate-gamma', is_flag=True, help='list every non-disjoint merge')
@click.option('--limit', type=int, default=None, help='most solutions to list')
@click.option('--seed', type=int, default=None, help='shuffle the column merge order')
@click.option('--output', default=None, help='write the report here instead of stdout')
def decompose(input_path, bound, free, algorithm, mcp, encoding, extend_missing,
              enumerate_gamma, limit, seed, output):
    """Decompose TABLE into T_g and T_h."""
    _finish('decompose', output, input_path=input_path,
            bound=[split_names(b) for b in bound],
            free=split_names(free) if free is not None else None,
            algorithm=algorithm, mcp=mcp, encoding=encoding, extend_missing=extend_missing,
            enumerate_gamma=enumerate_gamma, limit=limit, seed=seed)


@command.command(name='chart')
@table_argument
@click.option('--bound', required=True)
@click.option('--free', default=None)
@click.option('--extend-missing', is_flag=True)
@click.option('--output', default=None)
def chart(input_path, bound, free, extend_missing, output):
    """Print the decomposition chart of TABLE."""
    _finish('chart', output, input_path=input_path, bound=[split_names(bound)],
            free=split_names(free) if free is not None else None, extend_missing=extend_missing)


@command.command(name='check-fd')
@table_argument
@click.option('--lhs', default='')
@click.option('--rhs', required=True)
@click.option('--output', default=None)
def check_fd(input_path, lhs, rhs, output):
    """Check the functional dependency LHS -> RHS."""
    _finish('check-fd', output, input_path=input_path, lhs=split_names(lhs), rhs=split_names(rhs))


@command.command(name='check-mvd')
@table_argument
@click.option('--lhs', default='')
@click.option('--rhs', required=True)
@click.option('--dot', is_flag=True, help='append the bipartite graph in graphviz format')
@click.option('--output', default=None)
def check_mvd(input_path, lhs, rhs, dot, output):
    """Check the multi-valued dependency LHS ->> RHS."""
    _finish('check-mvd', output, input_path=input_path, lhs=split_names(lhs),
            rhs=split_names(rhs), dot=dot)


@command.command(name='verify')
@table_argument
@click.option('--g', 'g_paths', multiple=True, required=True,
              type=click.Path(exists=True, dir_okay=False))
@click.option('--h', 'h_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--extend-missing', is_flag=True)
@click.option('--output', default=None)
def verify(input_path, g_paths, h_path, extend_missing, output):
    """Check T_g and T_h files against TABLE."""
    _finish('verify', output, input_path=input_path, g_paths=list(g_paths), h_path=h_path,
            extend_missing=extend_missing)
