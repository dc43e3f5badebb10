import os
import sys

import click
import yaml
from jinja2 import Template

from twyla.epwlattice import catalog, family, pell, verify
from twyla.epwlattice.catalog import CatalogError, CatalogId
from twyla.epwlattice.family import FamilyError, OgradyCase
from twyla.epwlattice.lattice import Lattice, LatticeError
from twyla.epwlattice.prompt import (csv_table, error_prompt, prompt,
                                     prompt_template)

__version__ = '0.1.0'

# Loaded from the working directory before the command line is parsed; keys
# are option names, nested mappings are keyed by sub-command.
CONFIG_FILE = 'epwlattice.yml'

EXIT_INPUT_ERROR = 1
EXIT_UNSOLVABLE = 2
EXIT_VERIFICATION_FAILED = 3

PELL_HEADER = ['d', 'solvable', 'k', 'y', 'x']
FAMILY_HEADER = ['n', 'd', 'g', 'r', 'gamma_delta2', 'disc_pi',
                 'pell_y', 'pell_x']
LATTICE_HEADERS = {
    'report': ['lattice', 'rank', 'discriminant', 'positive', 'negative',
               'zero', 'even'],
    'disc': ['lattice', 'discriminant'],
    'signature': ['lattice', 'positive', 'negative', 'zero'],
    'even': ['lattice', 'even'],
}
OGRADY_HEADER = ['r', 'case', 'genus', 'degree', 'n']
VERIFY_HEADER = ['group', 'status', 'counterexample']

PELL_TEMPLATE = Template('''
D={{ d }}: solvable
minimal solution: y={{ solutions[0].y }}, x={{ solutions[0].x }}
{% for s in solutions %}
  {{ loop.index }}: y={{ s.y }}, x={{ s.x }}
{% endfor %}
''')

LATTICE_TEMPLATE = Template('''
{{ name }}:
{% if op in ('report', 'disc') %}
  rank: {{ report.rank }}
  discriminant: {{ report.discriminant }}
{% endif %}
{% if op in ('report', 'signature') %}
  signature: ({{ report.signature.positive }},{{ report.signature.negative }},{{ report.signature.zero }})
{% endif %}
{% if op in ('report', 'even') %}
  even: {{ 'yes' if report.even else 'no' }}
{% endif %}
''')

FAMILY_TEMPLATE = Template('''
{% for r in records %}
n={{ r.n }}: d={{ r.d }} g={{ r.g }} r={{ r.ogrady_r }} (gamma,delta2)={{ r.gamma_delta2 }} disc(Pi)={{ r.disc_pi }} pell=({{ r.pell.y }},{{ r.pell.x }})
{% endfor %}
''')


class ConfigError(Exception):
    pass


class InputError(click.UsageError):
    '''A usage error reported with the input error exit code.'''
    exit_code = EXIT_INPUT_ERROR


# click >= 8.2 signals a bare group invocation with a UsageError subclass
# that has to keep printing the help text.
NO_ARGS_IS_HELP = getattr(click.exceptions, 'NoArgsIsHelpError', ())


class InputErrorMixin:
    def parse_args(self, ctx, args):
        try:
            return super().parse_args(ctx, args)
        except NO_ARGS_IS_HELP:
            raise
        except InputError:
            raise
        except click.UsageError as e:
            raise InputError(e.format_message(), ctx=e.ctx or ctx) from e


class Command(InputErrorMixin, click.Command):
    pass


class Group(InputErrorMixin, click.Group):
    command_class = Command

    def resolve_command(self, ctx, args):
        try:
            return super().resolve_command(ctx, args)
        except InputError:
            raise
        except click.UsageError as e:
            raise InputError(e.format_message(), ctx=e.ctx or ctx) from e


def load_config(config_file: str) -> dict:
    if not os.path.isfile(config_file):
        return {}
    with open(config_file) as fd:
        config = yaml.safe_load(fd)
    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ConfigError(f'{config_file} must contain a mapping')
    return config


def fail(msg: str):
    error_prompt(msg)
    sys.exit(EXIT_INPUT_ERROR)


def emit_csv(header, rows):
    click.echo(csv_table(header, rows), nl=False)


def csv_bool(value: bool) -> str:
    return 'true' if value else 'false'


def parse_gram(text: str) -> Lattice:
    '''
    parse_gram reads a row-major Gram matrix: rows separated by ";" (or
    newlines), entries by ",", e.g. "10,11;11,10".
    '''
    rows = [row for row in text.replace('\n', ';').split(';') if row.strip()]
    if not rows:
        raise LatticeError('Empty Gram matrix')
    try:
        gram = [[int(entry) for entry in row.split(',')] for row in rows]
    except ValueError as e:
        raise LatticeError(f'Malformed Gram matrix: {e}')
    return Lattice(gram)


@click.group(cls=Group)
@click.version_option(version=__version__, prog_name='epwlattice')
@click.option('--format', type=click.Choice(['human', 'csv']),
              default='human', help='Output format of all sub-commands.')
@click.pass_context
def cli(ctx: click.Context, format: str):
    ctx.obj = {'format': format}


@cli.command('pell')
@click.option('--d', 'd', type=int, required=True,
              help='The D in y^2 - D x^2 = -1.')
@click.option('--count', type=int, default=1,
              help='Number of solutions to list, smallest first.')
@click.pass_obj
def cmd_pell(obj: dict, d: int, count: int):
    if d < 1:
        fail(f'D must be at least 1, got {d}')
    if pell.is_square(d):
        fail(f'D = {d} is a perfect square')
    if count < 1:
        fail(f'--count must be at least 1, got {count}')

    if not pell.is_solvable_negative(d):
        if obj['format'] == 'csv':
            emit_csv(PELL_HEADER, [(d, csv_bool(False), None, None, None)])
        else:
            prompt(f'D={d}: unsolvable')
        sys.exit(EXIT_UNSOLVABLE)

    solutions = pell.enumerate_negative(d, count)
    if obj['format'] == 'csv':
        emit_csv(PELL_HEADER, [(d, csv_bool(True), k, s.y, s.x)
                               for k, s in enumerate(solutions, 1)])
    else:
        prompt_template(PELL_TEMPLATE, d=d, solutions=solutions)


@cli.command('lattice')
@click.option('--id', 'lattice_id',
              help='Catalog lattice: U, E8, A1(a), I22_2, LAMBDA2, LAMBDA0, '
                   'K3, NS_HILB(d), R(n), NS3(n), PI(n).')
@click.option('--gram', help='Inline Gram matrix, rows separated by ";" and '
                             'entries by ",", e.g. "10,11;11,10".')
@click.option('--gram-file', type=click.Path(exists=True, dir_okay=False),
              help='File containing a Gram matrix in the --gram syntax.')
@click.option('--op', type=click.Choice(['report', 'disc', 'signature',
                                         'even']),
              default='report', help='Quantity to compute.')
@click.pass_obj
def cmd_lattice(obj: dict, lattice_id: str, gram: str, gram_file: str,
                op: str):
    sources = [s for s in (lattice_id, gram, gram_file) if s is not None]
    if len(sources) != 1:
        fail('Exactly one of --id, --gram and --gram-file is required')

    try:
        if lattice_id is not None:
            catalog_id = CatalogId.parse(lattice_id)
            name = str(catalog_id)
            lattice = catalog.build(catalog_id)
        else:
            name = 'gram'
            if gram_file is not None:
                with open(gram_file) as fd:
                    gram = fd.read()
            lattice = parse_gram(gram)
    except (CatalogError, LatticeError) as e:
        fail(str(e))

    report = catalog.report(lattice)
    if obj['format'] == 'csv':
        sig = report.signature
        row = {
            'report': [name, report.rank, report.discriminant, sig.positive,
                       sig.negative, sig.zero, csv_bool(report.even)],
            'disc': [name, report.discriminant],
            'signature': [name, sig.positive, sig.negative, sig.zero],
            'even': [name, csv_bool(report.even)],
        }[op]
        emit_csv(LATTICE_HEADERS[op], [row])
    else:
        prompt_template(LATTICE_TEMPLATE, name=name, op=op, report=report)


@cli.command('family')
@click.option('--n-min', type=int, default=1, help='First family index.')
@click.option('--n-max', type=int, default=10, help='Last family index.')
@click.pass_obj
def cmd_family(obj: dict, n_min: int, n_max: int):
    if not 1 <= n_min <= n_max:
        fail(f'Need 1 <= n-min <= n-max, got {n_min} and {n_max}')
    try:
        records = [family.family(n) for n in range(n_min, n_max + 1)]
    except FamilyError as e:
        fail(str(e))

    if obj['format'] == 'csv':
        emit_csv(FAMILY_HEADER, [
            (r.n, r.d, r.g, r.ogrady_r, r.gamma_delta2, r.disc_pi,
             r.pell.y, r.pell.x) for r in records])
    else:
        prompt_template(FAMILY_TEMPLATE, records=records)


def describe_status(status: family.OgradyStatus) -> str:
    if status.case is OgradyCase.EVEN_FAMILY:
        return f'even family: n={status.n}, d={status.degree}'
    if status.case is OgradyCase.ODD_OPEN:
        if status.note:
            return f'odd: open (r={status.r} {status.note})'
        return 'odd: open'
    return f'{status.case.value}, degree {status.degree}'


@cli.command('ogrady')
@click.option('--r', 'r', type=int, required=True,
              help="O'Grady parameter r, genus r^2 + 2.")
@click.pass_obj
def cmd_ogrady(obj: dict, r: int):
    try:
        status = family.ogrady_status(r)
    except FamilyError as e:
        fail(str(e))

    if obj['format'] == 'csv':
        emit_csv(OGRADY_HEADER, [(status.r, status.case.name, status.genus,
                                  status.degree, status.n)])
    else:
        prompt(f'r={status.r}: {describe_status(status)}')


@cli.command('verify')
@click.option('--n-max', type=int, default=100,
              help='Largest family index checked by the family groups.')
@click.pass_obj
def cmd_verify(obj: dict, n_max: int):
    if n_max < 1:
        fail(f'--n-max must be at least 1, got {n_max}')

    if obj['format'] == 'csv':
        lines = []
        failures = verify.run_checks(n_max, printer=lines.append,
                                     error_printer=lines.append)
        counterexamples = {name: str(e) for name, e in failures}
        emit_csv(VERIFY_HEADER, [
            (name, status, counterexamples.get(name))
            for status, name in (line.split(' ', 1) for line in lines)])
    else:
        failures = verify.run_checks(n_max, printer=prompt,
                                     error_printer=error_prompt)

    if failures:
        if obj['format'] != 'csv':
            name, e = failures[0]
            error_prompt(f'first counterexample ({name}): {e}')
        sys.exit(EXIT_VERIFICATION_FAILED)
    if obj['format'] != 'csv':
        prompt('All checks passed.')


def main():
    try:
        config = load_config(CONFIG_FILE)
    except (ConfigError, yaml.YAMLError) as e:
        error_prompt(str(e))
        sys.exit(EXIT_INPUT_ERROR)
    cli(obj={}, default_map=config)


if __name__ == '__main__':
    main()
