from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from sympy.matrices import normalforms

Matrix = Tuple[Tuple[int, ...], ...]


def freeze(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(entry) for entry in row) for row in rows)


def identity(size: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def transpose(rows: Sequence[Sequence[int]]) -> Matrix:
    if not rows:
        return ()
    return tuple(zip(*rows))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    columns = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, column))
                       for column in columns)
                 for row in a)


def matvec(a: Sequence[Sequence[int]], vec: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, vec)) for row in a)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def determinant(rows: Sequence[Sequence[int]]) -> int:
    '''
    determinant runs fraction-free Bareiss elimination so every intermediate
    value stays an exact integer.
    '''
    if not rows:
        return 1
    return int(sympy.Matrix(rows).det(method='bareiss'))


def echelon(rows: Sequence[Sequence[int]],
            ncols: int = None) -> List[List[int]]:
    '''
    echelon reduces integer row vectors to row echelon form using only
    unimodular row operations (swaps and adding integer multiples), so the
    row span over Z is preserved. Only the first ncols columns are used for
    pivoting; trailing columns are carried along.
    '''
    m = [list(row) for row in rows]
    if not m:
        return m
    if ncols is None:
        ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= len(m):
            break
        while True:
            candidates = [i for i in range(pivot_row, len(m)) if m[i][col]]
            if not candidates:
                break
            best = min(candidates, key=lambda i: abs(m[i][col]))
            m[pivot_row], m[best] = m[best], m[pivot_row]
            pivot = m[pivot_row]
            done = True
            for i in range(pivot_row + 1, len(m)):
                if m[i][col]:
                    q = m[i][col] // pivot[col]
                    m[i] = [a - q * b for a, b in zip(m[i], pivot)]
                    if m[i][col]:
                        done = False
            if done:
                pivot_row += 1
                break
    return m


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> Matrix:
    '''
    Row-style Hermite normal form of the Z-span of rows: zero rows dropped,
    pivots positive, entries above each pivot reduced into [0, pivot).

    sympy builds the column-style form with pivots at the bottom right, so
    the coordinates are reversed on the way in and on the way out.
    '''
    if not rows or not rows[0]:
        return ()
    flipped = sympy.Matrix([list(reversed(row)) for row in rows]).T
    hnf = normalforms.hermite_normal_form(flipped)
    return freeze(list(hnf.col(c))[::-1]
                  for c in reversed(range(hnf.cols)))


def rank(rows: Sequence[Sequence[int]]) -> int:
    return sum(1 for row in echelon(rows) if any(row))


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    '''
    integer_kernel returns a basis, in Hermite normal form, of
    {x in Z^ncols : A x = 0} where A has the given rows. The kernel of an
    integer matrix is always a saturated sublattice of Z^ncols.
    '''
    nrows = len(rows)
    # Row-reduce [A^T | I]: rows whose A^T part vanishes carry kernel vectors
    # in their identity part.
    augmented = [[rows[i][j] for i in range(nrows)] + list(unit)
                 for j, unit in enumerate(identity(ncols))]
    reduced = echelon(augmented, nrows)
    kernel = [row[nrows:] for row in reduced if not any(row[:nrows])]
    return hermite_normal_form(kernel)


def rational_inertia(rows: Sequence[Sequence[int]]) -> Tuple[int, int, int]:
    '''
    rational_inertia diagonalizes a symmetric matrix by exact congruence over
    Q (Lagrange's method) and counts positive, negative and zero diagonal
    entries.
    '''
    size = len(rows)
    a = [[Fraction(entry) for entry in row] for row in rows]
    positive = negative = 0
    k = 0
    while k < size:
        pivot = next((i for i in range(k, size) if a[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in range(k, size)
                         for j in range(i + 1, size) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # Zero diagonal with a nonzero off-diagonal entry: add row and
            # column j to i, the new diagonal entry is 2 a[i][j].
            for col in range(size):
                a[i][col] += a[j][col]
            for row in range(size):
                a[row][i] += a[row][j]
            pivot = i
        a[k], a[pivot] = a[pivot], a[k]
        for row in a:
            row[k], row[pivot] = row[pivot], row[k]
        p = a[k][k]
        if p > 0:
            positive += 1
        else:
            negative += 1
        for i in range(k + 1, size):
            factor = a[i][k] / p
            if factor:
                for j in range(k + 1, size):
                    a[i][j] -= factor * a[k][j]
        for i in range(k + 1, size):
            a[i][k] = a[k][i] = Fraction(0)
        k += 1
    return positive, negative, size - positive - negative
