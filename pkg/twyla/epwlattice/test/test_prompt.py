import csv
import io
import unittest
import unittest.mock as mock

from jinja2 import Template

from twyla.epwlattice.prompt import (csv_table, error_prompt, prompt,
                                     prompt_template)


def reemit_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        return ''
    return csv_table(rows[0], rows[1:])


class TestPrompt(unittest.TestCase):
    def test_prompt(self):
        with mock.patch('sys.stdout') as mock_stdout:
            prompt('D=5: solvable')

        mock_stdout.assert_has_calls([
            mock.call.write('\x1b[32m>> '),  # green prompt
            mock.call.write('D=5: solvable'),
            mock.call.write('\n')  # newline added by print()
        ])

    def test_prompt_with_indentation(self):
        with mock.patch('sys.stdout') as mock_stdout:
            prompt('D=5: solvable', indent=4)

        mock_stdout.assert_has_calls([
            mock.call.write('\x1b[32m>>     '),  # green prompt + indentation
            mock.call.write('D=5: solvable'),
            mock.call.write('\n')
        ])

    def test_error_prompt(self):
        with mock.patch('sys.stdout') as mock_stdout:
            error_prompt('D = 4 is a perfect square')

        mock_stdout.assert_has_calls([
            mock.call.write('\x1b[31m>> '),  # red prompt
            mock.call.write('D = 4 is a perfect square'),
            mock.call.write('\n')
        ])

    def test_prompt_template_skips_blank_lines(self):
        printer = mock.MagicMock()
        template = Template('''
{% for n in values %}
value {{ n }}
{% endfor %}
''')
        prompt_template(template, printer=printer, values=[1, 2])

        printer.assert_has_calls([mock.call('value 1'), mock.call('value 2')])
        assert printer.call_count == 2


class TestCsv(unittest.TestCase):
    def test_table(self):
        table = csv_table(['d', 'solvable', 'k', 'y', 'x'],
                          [(5, 'true', 1, 2, 1), (34, 'false', None, None, None)])
        assert table == 'd,solvable,k,y,x\n5,true,1,2,1\n34,false,,,\n'

    def test_negative_numbers_use_ascii_minus(self):
        assert csv_table(['disc'], [(-68,)]) == 'disc\n-68\n'

    def test_round_trip(self):
        table = csv_table(['n', 'd', 'disc_pi'], [(1, 34, -68), (2, 74, -148)])
        assert reemit_csv(table) == table
        assert reemit_csv('') == ''

    def test_round_trip_quotes_fields_with_commas(self):
        table = csv_table(['group', 'status', 'counterexample'],
                          [('pell suite', 'FAIL', 'Pell(d=5, y=2, x=1)')])
        assert table.endswith('"Pell(d=5, y=2, x=1)"\n')
        assert reemit_csv(table) == table
