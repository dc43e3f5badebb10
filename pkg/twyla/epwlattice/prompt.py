import csv
import io
import sys
from typing import Iterable, Sequence

import colorama
from jinja2 import Template

# Use a colorized prompt to differentiate human readable results from
# diagnostics of the Python runtime. Colors are stripped on non-terminals.
colorama.init(autoreset=True)
PROMPT = '>> '


def prompt(msg: str, indent: int=0):
    indentation = ' ' * indent
    sys.stdout.write(colorama.Fore.GREEN + PROMPT + indentation)
    print(msg)


def error_prompt(msg: str, indent: int=0):
    indentation = ' ' * indent
    sys.stdout.write(colorama.Fore.RED + PROMPT + indentation)
    print(msg)


def prompt_template(template: Template, printer=prompt, **context):
    '''Render a Jinja2 template and print every non-empty line.'''
    rendered = template.render(**context)
    for line in rendered.split('\n'):
        if line.strip():
            printer(line)


def csv_table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    '''
    csv_table renders a comma separated table with a header row and `\\n`
    record terminators. Integers are written as plain decimals.
    '''
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow(['' if cell is None else cell for cell in row])
    return buf.getvalue()
