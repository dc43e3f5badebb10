import random
import unittest
from unittest import mock

import pytest

from twyla.epwlattice import linalg, verify
from twyla.epwlattice import lattice as lc
from twyla.epwlattice.lattice import LatticeError
from twyla.epwlattice.verify import VerificationFailed


class GeneratorTests(unittest.TestCase):

    def test_random_unimodular_inverse(self):
        rng = random.Random(7)
        for rank in range(1, 6):
            m, m_inv = verify.random_unimodular(rng, rank, steps=12)
            assert linalg.matmul(m, m_inv) == linalg.identity(rank)
            assert linalg.determinant(m) in (1, -1)


    def test_random_gram_is_symmetric(self):
        rng = random.Random(8)
        for _ in range(20):
            lattice = verify.random_gram(rng, 4, even=True)
            assert lc.is_even(lattice)


    def test_random_root_has_square_two(self):
        rng = random.Random(9)
        for _ in range(20):
            lattice, e = verify.random_root(rng)
            assert lc.square(lattice, e) in (2, -2)


class CheckTests(unittest.TestCase):

    def test_cheap_groups_pass(self):
        for check in [verify.check_involution_images, verify.check_fujiki,
                      verify.check_family_identities, verify.check_involutions,
                      verify.check_necessary_condition, verify.check_erratum,
                      verify.check_index_law, verify.check_saturation,
                      verify.check_signatures, verify.check_products]:
            check(5)


    @mock.patch('twyla.epwlattice.verify.lc.product')
    def test_products_catch_asymmetry(self, mock_product):
        mock_product.side_effect = lambda lattice, x, y: x.coords[0]
        with pytest.raises(VerificationFailed) as excinfo:
            verify.check_products(1)
        assert 'not symmetric' in str(excinfo.value)


    def test_expect(self):
        verify.expect(True, 'unused')
        with pytest.raises(VerificationFailed) as excinfo:
            verify.expect(False, 'n=3: broken')
        assert str(excinfo.value) == 'n=3: broken'


class RunChecksTests(unittest.TestCase):

    def test_reports_pass_and_fail(self):
        def failing(n_max):
            raise VerificationFailed(f'n={n_max}: counterexample')

        def crashing(n_max):
            raise LatticeError('singular')

        printer = mock.MagicMock()
        error_printer = mock.MagicMock()
        failures = verify.run_checks(
            4, printer, error_printer,
            checks=[('good', lambda n_max: None), ('bad', failing),
                    ('worse', crashing)])

        printer.assert_called_once_with('PASS good')
        error_printer.assert_has_calls([mock.call('FAIL bad'),
                                        mock.call('FAIL worse')])
        assert [name for name, _ in failures] == ['bad', 'worse']
        assert str(failures[0][1]) == 'n=4: counterexample'


    def test_assertion_errors_are_failures(self):
        def inexact(n_max):
            raise AssertionError('y^2 - 5x^2 = -19')

        error_printer = mock.MagicMock()
        failures = verify.run_checks(1, print, error_printer,
                                     checks=[('pell suite', inexact)])
        error_printer.assert_called_once_with('FAIL pell suite')
        assert str(failures[0][1]) == 'y^2 - 5x^2 = -19'


    def test_unexpected_errors_propagate(self):
        def broken(n_max):
            raise ZeroDivisionError

        with pytest.raises(ZeroDivisionError):
            verify.run_checks(1, print, print, checks=[('broken', broken)])


    def test_rejects_bad_scale(self):
        with pytest.raises(VerificationFailed):
            verify.run_checks(0, print, print, checks=[])


    def test_every_group_is_registered(self):
        names = [name for name, _ in verify.CHECKS]
        assert len(names) == len(set(names))
        assert 'pell suite' in names
        assert 'closed form erratum' in names
        assert 'products' in names
