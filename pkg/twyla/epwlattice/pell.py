'''
Exact solver for the negative Pell equation y^2 - D x^2 = -1.

Solvability is decided by the parity of the period of the continued
fraction of sqrt(D); all solutions are odd powers of the fundamental one in
Z[sqrt(D)].
'''
import math
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from sympy.ntheory.continued_fraction import continued_fraction_periodic
from sympy.ntheory.primetest import is_square, isprime
from sympy.ntheory.residue_ntheory import sqrt_mod


class PellError(Exception):
    pass


class PerfectSquare(PellError):
    pass


class Unsolvable(PellError):
    pass


class NotPrime(PellError):
    pass


class PellSolution(NamedTuple):
    d: int
    y: int
    x: int

    def norm(self) -> int:
        return self.y * self.y - self.d * self.x * self.x


class ContinuedFraction(NamedTuple):
    d: int
    a0: int
    period: Tuple[int, ...]


def _check_d(d: int):
    if d < 2:
        raise PellError(f'D must be at least 2, got {d}')
    if is_square(d):
        raise PerfectSquare(f'D = {d} is a perfect square')


def cf_expansion(d: int) -> ContinuedFraction:
    _check_d(d)
    # For sqrt(D) the period closes with the partial quotient 2 a0.
    a0, period = continued_fraction_periodic(0, 1, d)
    return ContinuedFraction(d, int(a0), tuple(int(a) for a in period))


def fundamental_negative(d: int) -> Optional[PellSolution]:
    '''
    fundamental_negative returns the solution with minimal positive x, read
    off the convergent closing the first period, or None when the period is
    even and no solution exists.
    '''
    cf = cf_expansion(d)
    if len(cf.period) % 2 == 0:
        return None
    quotients = (cf.a0,) + cf.period[:-1]
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    for a in quotients:
        p_prev, p = a * p_prev + p, p_prev
        q_prev, q = a * q_prev + q, q_prev
    solution = PellSolution(d, p_prev, q_prev)
    assert solution.norm() == -1
    return solution


def _multiply(d: int, a: Tuple[int, int], b: Tuple[int, int]):
    # (y1 + x1 sqrt(D)) (y2 + x2 sqrt(D)) in Z[sqrt(D)]
    return a[0] * b[0] + d * a[1] * b[1], a[0] * b[1] + a[1] * b[0]


def enumerate_negative(d: int, k: int) -> List[PellSolution]:
    if k < 1:
        raise PellError(f'need at least one solution, got k = {k}')
    fundamental = fundamental_negative(d)
    if fundamental is None:
        raise Unsolvable(f'y^2 - {d}x^2 = -1 has no integer solution')
    unit = (fundamental.y, fundamental.x)
    step = _multiply(d, unit, unit)
    solutions = []
    current = unit
    for _ in range(k):
        solution = PellSolution(d, *current)
        assert solution.norm() == -1
        solutions.append(solution)
        current = _multiply(d, current, step)
    return solutions


def is_solvable_negative(d: int) -> bool:
    if d < 1:
        raise PellError(f'D must be positive, got {d}')
    if d == 1:
        # 0^2 - 1 * 1^2 = -1
        return True
    if is_square(d):
        return False
    return len(cf_expansion(d).period) % 2 == 1


def positive_solution(solution: PellSolution) -> Tuple[int, int]:
    '''Square of a -1 solution in Z[sqrt(D)]: a solution of the +1 equation.'''
    y, x = solution.y, solution.x
    return y * y + solution.d * x * x, 2 * x * y


def prime_criterion(p: int) -> bool:
    '''
    For a prime p the negative Pell equation y^2 - p x^2 = -1 is solvable
    iff p = 2 or p = 1 (mod 4).
    '''
    if not isprime(p):
        raise NotPrime(f'{p} is not prime; the criterion holds for primes only')
    return p == 2 or p % 4 == 1


def brute_force_negative(d: int, x_max: int) -> Optional[PellSolution]:
    '''
    brute_force_negative searches 1 <= x <= x_max for y with
    y^2 - D x^2 = -1. A D for which y^2 = -1 has no root modulo D is
    rejected up front.
    '''
    if d < 1:
        raise PellError(f'D must be positive, got {d}')
    if d > 1 and sqrt_mod(d - 1, d) is None:
        return None
    for x in range(1, x_max + 1):
        target = d * x * x - 1
        y = math.isqrt(target)
        if y * y == target:
            return PellSolution(d, y, x)
    return None


def closed_form_d5(n: int) -> Tuple[int, int]:
    '''
    Evaluate the widely quoted closed forms for D = 5

        2 y_n = (1 + 2 sqrt5)(2 + sqrt5)^(2n) + (1 - 2 sqrt5)(2 - sqrt5)^(2n)
        2 x_n = (2 + 1/sqrt5)(2 + sqrt5)^(2n) + (2 - 1/sqrt5)(2 - sqrt5)^(2n)

    exactly. With (2 + sqrt5)^(2n) = A + B sqrt5 the conjugate terms cancel
    and (c + e sqrt5)(A + B sqrt5) + conjugate = 2(cA + 5eB). These pairs do
    NOT solve y^2 - 5x^2 = -1; n = 1 gives (49, 22) with norm -19.
    '''
    if n < 0:
        raise PellError(f'n must be non-negative, got {n}')
    power = (1, 0)
    for _ in range(2 * n):
        power = _multiply(5, power, (2, 1))
    a, b = power
    y = Fraction(1) * a + 5 * Fraction(2) * b
    x = Fraction(2) * a + 5 * Fraction(1, 5) * b
    return int(y), int(x)
