'''
Exact arithmetic on integral lattices given by Gram matrices.

Every value here is immutable and every computation is done with Python
integers or fractions, never floats.
'''
import functools
import math
from typing import Iterable, List, NamedTuple, Sequence

from twyla.epwlattice import linalg


class LatticeError(Exception):
    pass


class InvalidGram(LatticeError):
    pass


class DimensionMismatch(LatticeError):
    pass


class DependentBasis(LatticeError):
    pass


class ReflectionError(LatticeError):
    pass


class ZeroVector(LatticeError):
    pass


class Signature(NamedTuple):
    positive: int
    negative: int
    zero: int

    def __add__(self, other):
        return Signature(self.positive + other.positive,
                         self.negative + other.negative,
                         self.zero + other.zero)

    def __str__(self):
        return f'({self.positive},{self.negative},{self.zero})'


class Lattice:
    def __init__(self, gram: Sequence[Sequence[int]]):
        gram = linalg.freeze(gram)
        size = len(gram)
        if any(len(row) != size for row in gram):
            raise InvalidGram('Gram matrix is not square')
        for i in range(size):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise InvalidGram(
                        f'Gram matrix is not symmetric at ({i},{j})')
        self.gram = gram


    @property
    def rank(self) -> int:
        return len(self.gram)


    def vector(self, *coords: int) -> 'LatticeVector':
        return LatticeVector(self, coords)


    def zero(self) -> 'LatticeVector':
        return LatticeVector(self, (0,) * self.rank)


    def basis(self) -> List['LatticeVector']:
        return [LatticeVector(self, row) for row in linalg.identity(self.rank)]


    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram


    def __hash__(self):
        return hash(self.gram)


    def __repr__(self):
        return f'Lattice({[list(row) for row in self.gram]})'


class LatticeVector:
    '''
    Integer coordinates of an element of a lattice in its distinguished
    basis. Supports the Z-module operations so classes can be written as
    `h - 2 * delta`.
    '''
    __slots__ = ['lattice', 'coords']

    def __init__(self, lattice: Lattice, coords: Iterable[int]):
        coords = tuple(int(c) for c in coords)
        if len(coords) != lattice.rank:
            raise DimensionMismatch(
                f'vector of length {len(coords)} in a lattice of rank '
                f'{lattice.rank}')
        self.lattice = lattice
        self.coords = coords


    def _check(self, other: 'LatticeVector'):
        if other.lattice != self.lattice:
            raise DimensionMismatch('vectors live in different lattices')


    def __add__(self, other):
        self._check(other)
        return LatticeVector(self.lattice,
                             (a + b for a, b in zip(self.coords, other.coords)))


    def __sub__(self, other):
        self._check(other)
        return LatticeVector(self.lattice,
                             (a - b for a, b in zip(self.coords, other.coords)))


    def __neg__(self):
        return LatticeVector(self.lattice, (-a for a in self.coords))


    def __rmul__(self, scalar: int):
        return LatticeVector(self.lattice, (scalar * a for a in self.coords))

    __mul__ = __rmul__


    def __bool__(self):
        return any(self.coords)


    def __eq__(self, other):
        return (isinstance(other, LatticeVector) and
                self.lattice == other.lattice and
                self.coords == other.coords)


    def __hash__(self):
        return hash((self.lattice, self.coords))


    def __repr__(self):
        return f'LatticeVector{self.coords}'


class Isometry:
    '''
    Integer matrix M acting on column coordinate vectors (x -> M x) with
    M^T G M = G and det M = +-1. Column i is the image of basis vector i.
    '''
    def __init__(self, lattice: Lattice, matrix: Sequence[Sequence[int]]):
        matrix = linalg.freeze(matrix)
        if not is_isometry(lattice, matrix):
            raise LatticeError('matrix does not preserve the Gram matrix')
        if linalg.determinant(matrix) not in (1, -1):
            raise LatticeError('isometry must have determinant +1 or -1')
        self.lattice = lattice
        self.matrix = matrix


    def __call__(self, v: LatticeVector) -> LatticeVector:
        if v.lattice != self.lattice:
            raise DimensionMismatch('vector does not belong to the lattice')
        return LatticeVector(self.lattice, linalg.matvec(self.matrix, v.coords))


    def __matmul__(self, other: 'Isometry') -> 'Isometry':
        return Isometry(self.lattice, linalg.matmul(self.matrix, other.matrix))


    def __neg__(self):
        return Isometry(self.lattice,
                        [[-a for a in row] for row in self.matrix])


    def is_identity(self) -> bool:
        return self.matrix == linalg.identity(self.lattice.rank)


    def __eq__(self, other):
        return (isinstance(other, Isometry) and
                self.lattice == other.lattice and
                self.matrix == other.matrix)


    def __repr__(self):
        return f'Isometry({[list(row) for row in self.matrix]})'


def _member(lattice: Lattice, v: LatticeVector):
    if v.lattice.rank != lattice.rank or v.lattice != lattice:
        raise DimensionMismatch(
            f'vector of length {len(v.coords)} does not belong to a lattice '
            f'of rank {lattice.rank}')


def product(lattice: Lattice, x: LatticeVector, y: LatticeVector) -> int:
    _member(lattice, x)
    _member(lattice, y)
    return linalg.dot(x.coords, linalg.matvec(lattice.gram, y.coords))


def square(lattice: Lattice, x: LatticeVector) -> int:
    return product(lattice, x, x)


def discriminant(lattice: Lattice) -> int:
    return linalg.determinant(lattice.gram)


def signature(lattice: Lattice) -> Signature:
    return Signature(*linalg.rational_inertia(lattice.gram))


def is_even(lattice: Lattice) -> bool:
    return all(lattice.gram[i][i] % 2 == 0 for i in range(lattice.rank))


def is_nondegenerate(lattice: Lattice) -> bool:
    return discriminant(lattice) != 0


def reflection(lattice: Lattice, e: LatticeVector) -> Isometry:
    '''
    reflection returns x -> x - (2(x,e)/(e,e)) e for a class with
    (e,e) = +-2. For (e,e) = -2 this is x -> x + (x,e) e.
    '''
    ee = square(lattice, e)
    if ee not in (2, -2):
        raise ReflectionError(
            f'reflection class must have square 2 or -2, got {ee}')
    pairings = linalg.matvec(lattice.gram, e.coords)
    for pairing in pairings:
        if (2 * pairing) % ee:
            raise ReflectionError('reflection is not integral on the lattice')
    # Column i is the image of basis vector i.
    columns = [[b - (2 * pairing // ee) * c
                for b, c in zip(unit, e.coords)]
               for unit, pairing in zip(linalg.identity(lattice.rank),
                                        pairings)]
    return Isometry(lattice, linalg.transpose(columns))


def negated_reflection(lattice: Lattice, r: LatticeVector) -> Isometry:
    '''
    negated_reflection returns z -> -z + (z,r) r, which fixes r and acts as
    -1 on the orthogonal complement of r.
    '''
    rr = square(lattice, r)
    if rr != 2:
        raise ReflectionError(f'class must have square 2, got {rr}')
    return -reflection(lattice, r)


def is_primitive(lattice: Lattice, v: LatticeVector) -> bool:
    _member(lattice, v)
    if not v:
        raise ZeroVector('primitivity is undefined for the zero vector')
    return functools.reduce(math.gcd, v.coords) == 1


def _independent(lattice: Lattice, basis: Sequence[LatticeVector]):
    for v in basis:
        _member(lattice, v)
    rows = [v.coords for v in basis]
    if linalg.rank(rows) != len(rows):
        raise DependentBasis('basis vectors are linearly dependent')
    return rows


def orthogonal_complement(lattice: Lattice,
                          v: LatticeVector) -> List[LatticeVector]:
    '''
    orthogonal_complement returns a basis of {x : (x,v) = 0}: the integer
    kernel of the functional x -> (G v) . x, which is saturated.
    '''
    _member(lattice, v)
    if not v:
        raise ZeroVector('orthogonal complement of the zero vector')
    functional = linalg.matvec(lattice.gram, v.coords)
    kernel = linalg.integer_kernel([functional], lattice.rank)
    return [LatticeVector(lattice, row) for row in kernel]


def induced_gram(lattice: Lattice,
                 basis: Sequence[LatticeVector]) -> Lattice:
    rows = _independent(lattice, basis)
    # B^T G B with the basis vectors as columns of B.
    return Lattice(linalg.matmul(linalg.matmul(rows, lattice.gram),
                                 linalg.transpose(rows)))


def saturation(lattice: Lattice,
               basis: Sequence[LatticeVector]) -> List[LatticeVector]:
    '''
    saturation returns a basis of (Q-span of basis) intersected with the
    lattice: the kernel of the integer annihilator of the span.
    '''
    rows = _independent(lattice, basis)
    annihilator = linalg.integer_kernel(rows, lattice.rank)
    saturated = linalg.integer_kernel(annihilator, lattice.rank)
    return [LatticeVector(lattice, row) for row in saturated]


def same_span(a: Sequence[LatticeVector], b: Sequence[LatticeVector]) -> bool:
    return (linalg.hermite_normal_form([v.coords for v in a]) ==
            linalg.hermite_normal_form([v.coords for v in b]))


def sublattice_discriminant_test(d_sub: int, d_sup: int) -> bool:
    '''
    Necessary condition for a finite-index inclusion: d_sub = index^2 d_sup.
    '''
    if d_sup == 0:
        raise LatticeError('discriminant of the overlattice must be nonzero')
    if d_sub % d_sup:
        return False
    quotient = d_sub // d_sup
    return quotient > 0 and math.isqrt(quotient) ** 2 == quotient


def direct_sum(*lattices: Lattice) -> Lattice:
    size = sum(lattice.rank for lattice in lattices)
    gram = [[0] * size for _ in range(size)]
    offset = 0
    for lattice in lattices:
        for i, row in enumerate(lattice.gram):
            gram[offset + i][offset:offset + lattice.rank] = row
        offset += lattice.rank
    return Lattice(gram)


def rescale(lattice: Lattice, a: int) -> Lattice:
    if a == 0:
        raise LatticeError('cannot rescale a lattice by zero')
    return Lattice([[a * entry for entry in row] for row in lattice.gram])


def is_isometry(lattice: Lattice, matrix: Sequence[Sequence[int]]) -> bool:
    if len(matrix) != lattice.rank or any(len(row) != lattice.rank
                                          for row in matrix):
        raise DimensionMismatch(
            f'matrix is not {lattice.rank}x{lattice.rank}')
    pulled_back = linalg.matmul(linalg.matmul(linalg.transpose(matrix),
                                              lattice.gram),
                                matrix)
    return pulled_back == lattice.gram
