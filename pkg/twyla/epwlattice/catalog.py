'''
Named constructors for the lattices used by the EPW / Hilbert square
computations, plus the standard building blocks.
'''
import re
from typing import NamedTuple, Optional

from twyla.epwlattice import lattice as lc
from twyla.epwlattice.lattice import Lattice, Signature


class CatalogError(Exception):
    pass


# E8 root lattice, positive definite, Bourbaki labelling of the Dynkin
# diagram: 1-3-4-5-6-7-8 with 2 attached to 4.
E8_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]

PARAMETRIZED = {'A1', 'NS_HILB', 'R', 'NS3', 'PI'}
PLAIN = {'U', 'E8', 'I22_2', 'LAMBDA2', 'LAMBDA0', 'K3'}

ID_PATTERN = re.compile(r'^\s*([A-Z][A-Z0-9_]*)\s*(?:\(\s*(-?\d+)\s*\))?\s*$')


class CatalogId(NamedTuple):
    name: str
    param: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> 'CatalogId':
        match = ID_PATTERN.match(text.upper())
        if match is None:
            raise CatalogError(f'Malformed lattice identifier: {text}')
        name, param = match.groups()
        catalog_id = cls(name, None if param is None else int(param))
        catalog_id.validate()
        return catalog_id


    def validate(self):
        if self.name in PLAIN:
            if self.param is not None:
                raise CatalogError(f'{self.name} takes no parameter')
            return
        if self.name not in PARAMETRIZED:
            raise CatalogError(f'Unknown lattice: {self.name}')
        if self.param is None:
            raise CatalogError(f'{self.name} needs a parameter')
        if self.name == 'A1' and self.param == 0:
            raise CatalogError('A1(a) needs a nonzero a')
        if self.name == 'NS_HILB' and (self.param < 2 or self.param % 2):
            raise CatalogError('NS_HILB(d) needs an even d >= 2')
        if self.name in ('R', 'NS3', 'PI') and self.param < 1:
            raise CatalogError(f'{self.name}(n) needs n >= 1')


    def __str__(self):
        if self.param is None:
            return self.name
        return f'{self.name}({self.param})'


class CatalogReport(NamedTuple):
    rank: int
    discriminant: int
    signature: Signature
    even: bool


def hyperbolic_plane() -> Lattice:
    return Lattice([[0, 1], [1, 0]])


def e8() -> Lattice:
    gram = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for a, b in E8_EDGES:
        gram[a - 1][b - 1] = gram[b - 1][a - 1] = -1
    return Lattice(gram)


def rank_one(a: int) -> Lattice:
    return Lattice([[a]])


def ns_hilbert_square(d: int) -> Lattice:
    '''
    NS(S^[2]) = Zh + Z delta for a degree d K3 surface of Picard rank 1:
    (h,h) = d, (h,delta) = 0, (delta,delta) = -2.
    '''
    return Lattice([[d, 0], [0, -2]])


def two_polarizations(n: int) -> Lattice:
    '''R(n) = Zf + Zh with (f,f) = (h,h) = 10 and (f,h) = n + 10.'''
    return Lattice([[10, n + 10], [n + 10, 10]])


def ns_three(n: int) -> Lattice:
    '''NS(S^[2]) in basis (f, h, delta) when NS(S) = R(n).'''
    return lc.direct_sum(two_polarizations(n), rank_one(-2))


def pi_basis(n: int):
    '''The classes gamma = h - 2 delta and delta2 = 4f - 9 delta in NS3(n).'''
    ns = ns_three(n)
    f, h, delta = ns.basis()
    return h - 2 * delta, 4 * f - 9 * delta


def pi_lattice(n: int) -> Lattice:
    return lc.induced_gram(ns_three(n), pi_basis(n))


def k3() -> Lattice:
    u = hyperbolic_plane()
    e8_negative = lc.rescale(e8(), -1)
    return lc.direct_sum(u, u, u, e8_negative, e8_negative)


def build(catalog_id: CatalogId) -> Lattice:
    catalog_id.validate()
    name, param = catalog_id
    if name == 'U':
        return hyperbolic_plane()
    if name == 'E8':
        return e8()
    if name == 'A1':
        return rank_one(param)
    if name == 'I22_2':
        return Lattice([[(1 if i < 22 else -1) if i == j else 0
                         for j in range(24)] for i in range(24)])
    if name == 'LAMBDA2':
        return Lattice([[2, 0], [0, 2]])
    if name == 'LAMBDA0':
        return lc.direct_sum(e8(), e8(), hyperbolic_plane(),
                             hyperbolic_plane(), rank_one(2), rank_one(2))
    if name == 'K3':
        return k3()
    if name == 'NS_HILB':
        return ns_hilbert_square(param)
    if name == 'R':
        return two_polarizations(param)
    if name == 'NS3':
        return ns_three(param)
    if name == 'PI':
        return pi_lattice(param)
    raise CatalogError(f'Unknown lattice: {name}')


def report(lattice: Lattice) -> CatalogReport:
    return CatalogReport(rank=lattice.rank,
                         discriminant=lc.discriminant(lattice),
                         signature=lc.signature(lattice),
                         even=lc.is_even(lattice))


def catalog_report(catalog_id: CatalogId) -> CatalogReport:
    return report(build(catalog_id))
