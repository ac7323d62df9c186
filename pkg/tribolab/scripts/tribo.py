# Copyright 2026 tribolab contributors
#
# All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""
tribo shell/cli
"""

import click
from tribolab import client
from tribolab.api.determinant import REPRESENTATIONS
from tribolab.api.series import OPS
from tribolab.common.exceptions import TriboException
from tribolab.core.grid import FORMATS
from tribolab.core.identities import VARIANT_POLICIES
from tribolab.core.sequences import PRESET_NAMES
from prettytable import PrettyTable
import json
import csv
import io
import logging


CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'], max_content_width=160)


class TriboUsageError(click.ClickException):
    """Library errors surface as usage errors: exit code 2"""
    exit_code = 2


def output_format(ctx):
    return ctx.obj.get_default('format', 'json')


def emit(ctx, text, output=None):
    """Writes to --output when given, otherwise to standard output"""
    output = output or ctx.obj.get_default('output')
    if output:
        logger.info('writing {}'.format(output))
        try:
            with open(output, 'w') as f:
                f.write(text)
        except OSError as exc:
            raise TriboUsageError('cannot write {}: {}'.format(output, exc))
    else:
        click.echo(text, nl=False)


def csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def table_text(header, rows):
    table = PrettyTable(header)
    for row in rows:
        table.add_row(row)
    table.align = 'l'
    return '{}\n'.format(table)


def render_rows(ctx, header, rows, document):
    fmt = output_format(ctx)
    if fmt == 'csv':
        return csv_text(header, rows)
    if fmt == 'human':
        return table_text(header, rows)
    return json.dumps(document, indent=2) + '\n'


@click.group(context_settings=CONTEXT_SETTINGS)
@click.option('--format', 'output_format',
              type=click.Choice(FORMATS),
              default=None,
              envvar='TRIBO_FORMAT',
              help='output format (json, csv or human; defaults to json). ' +
                   'Also can set TRIBO_FORMAT in environment')
@click.option('--output',
              default=None,
              type=click.Path(dir_okay=False),
              help='write the result to this file instead of standard output')
@click.option('--threads',
              default=None,
              type=int,
              envvar='TRIBO_THREADS',
              help='worker threads for verify (defaults to 1). ' +
                   'Also can set TRIBO_THREADS in environment')
@click.option('--strict-as-stated',
              is_flag=True,
              help='as_stated counterexamples of disputed identities also fail verify')
@click.option('-v', '--verbose', count=True,
              help='increase verbosity (-v INFO, -vv VERBOSE, -vvv DEBUG)')
@click.pass_context
def cli_tribo(ctx, **kwargs):
    global logger
    verbose = kwargs.pop('verbose', 0)
    ctx.obj = client.Client(verbose=verbose)
    ctx.obj.set_default_params(format=kwargs['output_format'],
                               output=kwargs['output'],
                               threads=kwargs['threads'],
                               strict_as_stated=True if kwargs['strict_as_stated'] else None)
    logger = logging.getLogger('tribolab')


####################
# Sequence operations
####################

@cli_tribo.command(name='seq', short_help='computes terms of a linear recurrence')
@click.option('--coeffs', default=None,
              help='recurrence coefficients c_1,...,c_l')
@click.option('--init', default=None,
              help='initial values a_0,...,a_{l-1}')
@click.option('--preset', default=None,
              help='named sequence: {}'.format(', '.join(PRESET_NAMES)))
@click.option('--from', 'lo', default=0, type=int, show_default=True,
              help='first index (negative indices extend the recurrence backwards)')
@click.option('--to', 'hi', default=10, type=int, show_default=True,
              help='last index')
@click.pass_context
def seq(ctx, coeffs, init, preset, lo, hi):
    """computes terms a_lo..a_hi of a linear recurrence

    \b
    Examples:
      tribo seq --preset tribonacci --from 0 --to 7
      tribo seq --coeffs 1,0,1 --init 0,1,1 --to 20
    """
    logger.debug("")
    try:
        spec = ctx.obj.sequence.get_spec(coeffs=coeffs, init=init, preset=preset)
        rows = ctx.obj.sequence.list(spec, lo, hi)
    except TriboException as exc:
        raise TriboUsageError(str(exc))
    emit(ctx, render_rows(ctx, ['n', 'value'], [[r['n'], r['value']] for r in rows], rows))


####################
# Determinant operations
####################

@cli_tribo.command(name='det', short_help='evaluates a determinant representation')
@click.option('--rep', required=True, type=click.Choice(REPRESENTATIONS),
              help='representation to evaluate')
@click.option('--uvw', default=None,
              help='coefficients u,v,w (Tribonacci representations)')
@click.option('--l', 'steps', default=None, type=int,
              help='step count (l-step representations)')
@click.option('--n', required=True, type=int,
              help='matrix order')
@click.pass_context
def det(ctx, rep, uvw, steps, n):
    """evaluates a determinant representation and compares it with its claimed value

    \b
    Exits with 1 when the determinant and the expected value differ.
    """
    logger.debug("")
    try:
        result = ctx.obj.determinant.evaluate(rep, n, uvw=uvw, l=steps)
    except TriboException as exc:
        raise TriboUsageError(str(exc))
    header = ['n', 'det', 'expected', 'match']
    emit(ctx, render_rows(ctx, header, [[result[h] for h in header]], result))
    if not result['match']:
        ctx.exit(1)


####################
# Series operations
####################

@cli_tribo.command(name='series', short_help='computes a truncated power series')
@click.option('--op', required=True, type=click.Choice(OPS),
              help='operation')
@click.option('--coeffs', default=None,
              help='input series c_0,c_1,... (recurrence coefficients for gf and gf-lstep)')
@click.option('--init', default=None,
              help='initial values of the recurrence (gf and gf-lstep)')
@click.option('--preset', default=None,
              help='named recurrence (gf and gf-lstep)')
@click.option('--uvw', default=None,
              help='coefficients u,v,w (gf-odd)')
@click.option('--order', default=None, type=int,
              help='truncation order (defaults to the input length, or 10 for generating functions)')
@click.pass_context
def series(ctx, op, coeffs, init, preset, uvw, order):
    """computes a truncated power series; coefficient k is the one of t^k

    \b
    Examples:
      tribo series --op gf --preset tribonacci --order 6
      tribo series --op recip --coeffs 1,2,7,24
    """
    logger.debug("")
    try:
        f = ctx.obj.series.compute(op, coeffs=coeffs, init=init, preset=preset, uvw=uvw,
                                   order=order)
    except TriboException as exc:
        raise TriboUsageError(str(exc))
    coefficients = f.to_json()
    emit(ctx, render_rows(ctx, ['power', 'coefficient'], list(enumerate(coefficients)),
                          coefficients))


####################
# Verification
####################

@cli_tribo.command(name='verify', short_help='runs the identity verification harness')
@click.option('--config', 'config_file', default=None,
              type=click.Path(exists=True, dir_okay=False),
              help='JSON or YAML run configuration; the options below override it')
@click.option('--suites', default=None,
              help='comma-separated identity ids, or "all"')
@click.option('--variant', default=None, type=click.Choice(VARIANT_POLICIES),
              help='variant policy for disputed identities')
@click.option('--grid-uvw', multiple=True,
              help='(u, v, w) point "u,v,w"; repeat for more points')
@click.option('--u', 'u_values', default=None, help='u values; crossed with --v and --w')
@click.option('--v', 'v_values', default=None, help='v values')
@click.option('--w', 'w_values', default=None, help='w values')
@click.option('--n', default=None, help='n range "lo..hi"')
@click.option('--k', default=None, help='k range "lo..hi"')
@click.option('--i', default=None, help='i range "lo..hi"')
@click.option('--m', default=None, help='m range "lo..hi"')
@click.option('--j', default=None, help='j range "lo..hi"')
@click.option('--l', default=None, help='l range "lo..hi"')
@click.option('--extend-backward', is_flag=True,
              help='evaluate points below an identity\'s index threshold by backward extension')
@click.pass_context
def verify(ctx, config_file, suites, variant, grid_uvw, u_values, v_values, w_values,
           n, k, i, m, j, l, extend_backward):
    """runs the identity verification harness over a parameter grid

    \b
    Exit codes: 0 all verified, 1 counterexample, 2 usage or config error.
    as_stated counterexamples of disputed identities are informational
    unless --strict-as-stated is given.
    """
    logger.debug("")
    grid = {'u': u_values, 'v': v_values, 'w': w_values,
            'n': n, 'k': k, 'i': i, 'm': m, 'j': j, 'l': l}
    if grid_uvw:
        grid['uvw'] = list(grid_uvw)
    grid = {key: value for key, value in grid.items() if value is not None}
    try:
        config = ctx.obj.verifier.config(
            config_file,
            suites=suites,
            variant=variant,
            grid=grid or None,
            extend_backward=True if extend_backward else None,
            format=ctx.obj.get_default('format'),
            output=ctx.obj.get_default('output'),
            threads=ctx.obj.get_default('threads'),
            strict_as_stated=ctx.obj.get_default('strict_as_stated'))
        doc = ctx.obj.verifier.run(config)
    except TriboException as exc:
        raise TriboUsageError(str(exc))
    emit(ctx, doc.render(), config.output)
    code = doc.exit_code()
    if code:
        ctx.exit(code)


@cli_tribo.command(name='catalog', short_help='lists the verifiable identities')
@click.pass_context
def catalog(ctx):
    """lists the verifiable identities with their grid symbols and variants"""
    logger.debug("")
    entries = ctx.obj.verifier.catalog()
    rows = [[e['id'], ','.join(e['symbols']), ','.join(e['variants'])] for e in entries]
    emit(ctx, render_rows(ctx, ['id', 'symbols', 'variants'], rows, entries))


####################
# Other operations
####################

@cli_tribo.command(name='version', short_help='shows the tool version')
@click.pass_context
def get_version(ctx):
    """shows the tool version"""
    print("tribolab version: {}".format(ctx.obj.get_version()))


def cli():
    try:
        cli_tribo()
        exit(0)
    except TriboException as exc:
        print("ERROR: {}".format(exc))
    exit(2)


if __name__ == '__main__':
    cli()
