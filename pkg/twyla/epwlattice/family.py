'''
The lattice-level pipeline behind the double EPW sextic family: the Fujiki
degree computation, the negative Pell necessary condition, the involution on
NS(S^[2]), the two-polarization lemma checks and the degree family

    d(n) = 8n^2 + 16n + 10 = 2(4(n+1)^2 + 1),   n >= 1.
'''
import enum
import math
from typing import NamedTuple, Optional, Tuple

from twyla.epwlattice import catalog, linalg, pell
from twyla.epwlattice import lattice as lc
from twyla.epwlattice.lattice import Isometry, Lattice, LatticeVector
from twyla.epwlattice.pell import PellSolution


class FamilyError(Exception):
    pass


class FujikiError(FamilyError):
    pass


class RegimeError(FamilyError):
    pass


# Only the numeric shadows of the geometry enter: a double cover of a sextic
# hypersurface, and the Fujiki constant of K3^[2]-type manifolds.
SEXTIC_DEGREE = 6
COVERING_DEGREE = 2
FUJIKI_CONSTANT = 3
# d(R0) for R0 = Zh + ZE, (h,h) = 10, (h,E) = 0, (E,E) = -2.
R0_GRAM = ((10, 0), (0, -2))
MIN_DEGREE = 10
# Largest rank for which k3_embedding_sufficient answers True.
EMBEDDING_RANK_BOUND = 10


class NecessaryCondition(NamedTuple):
    solvable: bool
    witness: Optional[PellSolution]
    gamma: Optional[LatticeVector]


class InvolutionReport(NamedTuple):
    d: int
    m: int
    matrix: Isometry
    image_of_h: LatticeVector
    image_of_delta: LatticeVector


class FamilyRecord(NamedTuple):
    n: int
    d: int
    g: int
    ogrady_r: int
    gram_pi: Tuple[Tuple[int, ...], ...]
    gamma: LatticeVector
    delta2: LatticeVector
    h2: LatticeVector
    disc_pi: int
    pell: PellSolution
    gamma_delta2: int
    h2_square: int
    gram_polarized: Tuple[Tuple[int, ...], ...]
    pi_saturated: bool


class LemmaDiscriminant(NamedTuple):
    disc_r: int
    contradiction_r0: bool


class LemmaInequality(NamedTuple):
    disc_r_prime: int
    strict: bool


class OgradyCase(enum.Enum):
    KNOWN_R0 = 'known'
    OGRADY_R2 = "O'Grady"
    EVEN_FAMILY = 'even family'
    ODD_OPEN = 'odd: open'


class OgradyStatus(NamedTuple):
    case: OgradyCase
    r: int
    genus: int
    degree: int
    n: Optional[int] = None
    record: Optional[FamilyRecord] = None
    note: Optional[str] = None


def degree(n: int) -> int:
    return 8 * n * n + 16 * n + 10


def fujiki_degree_to_bb(q4: int, c: int) -> int:
    '''
    fujiki_degree_to_bb solves q4 = c (x,x)^2 for the Beauville square
    (x,x) >= 0 of a class with top self-intersection q4.
    '''
    if q4 < 0 or c < 1:
        raise FujikiError(f'need q4 >= 0 and c >= 1, got q4={q4}, c={c}')
    if q4 % c:
        raise FujikiError(f'{q4} is not divisible by the Fujiki constant {c}')
    s = math.isqrt(q4 // c)
    if s * s != q4 // c:
        raise FujikiError(f'{q4}/{c} is not a perfect square')
    return s


def epw_top_intersection() -> int:
    return COVERING_DEGREE * SEXTIC_DEGREE


def polarization_class(d: int, witness: PellSolution) -> LatticeVector:
    '''The class x h - y delta in NS_HILB(d); it has square d x^2 - 2y^2.'''
    h, delta = catalog.ns_hilbert_square(d).basis()
    return witness.x * h - witness.y * delta


def necessary_condition(d: int) -> NecessaryCondition:
    '''
    A smooth double EPW sextic birational to S^[2], S of degree d and Picard
    rank 1, needs a class of square 2 in NS(S^[2]); writing it as x h - y
    delta gives y^2 - (g-1) x^2 = -1. Unsolvable means no such birational
    model exists; solvable is only necessary.
    '''
    if d % 2 or d < MIN_DEGREE:
        raise FamilyError(f'degree must be even and at least {MIN_DEGREE}, '
                          f'got {d}')
    g = d // 2 + 1
    if not pell.is_solvable_negative(g - 1):
        return NecessaryCondition(False, None, None)
    witness = pell.fundamental_negative(g - 1)
    gamma = polarization_class(d, witness)
    assert lc.square(gamma.lattice, gamma) == 2
    return NecessaryCondition(True, witness, gamma)


def epw_involution(d: int, m: int) -> InvolutionReport:
    '''
    epw_involution returns j: z -> -z + (z, gamma) gamma on NS_HILB(d) for
    gamma = h - m delta, which needs (gamma, gamma) = d - 2m^2 = 2.
    '''
    ns = catalog.ns_hilbert_square(d)
    h, delta = ns.basis()
    gamma = h - m * delta
    if lc.square(ns, gamma) != 2:
        raise FamilyError(f'gamma = h - {m} delta has square '
                          f'{lc.square(ns, gamma)}, not 2')
    j = lc.negated_reflection(ns, gamma)
    return InvolutionReport(d=d, m=m, matrix=j,
                            image_of_h=j(h), image_of_delta=j(delta))


def invariant_class(d: int, m: int) -> LatticeVector:
    '''
    The primitive generator of the fixed lattice ker(j - 1): a j-invariant
    class is proportional to gamma, so the generator is gamma itself.
    '''
    report = epw_involution(d, m)
    ns = report.matrix.lattice
    fixed = [[entry - int(i == k) for k, entry in enumerate(row)]
             for i, row in enumerate(report.matrix.matrix)]
    kernel = linalg.integer_kernel(fixed, ns.rank)
    if len(kernel) != 1:
        raise FamilyError(f'fixed lattice has rank {len(kernel)}, expected 1')
    generator = LatticeVector(ns, kernel[0])
    if generator.coords[0] < 0:
        generator = -generator
    return generator


def family(n: int) -> FamilyRecord:
    if n < 1:
        raise FamilyError(f'family index must be at least 1, got {n}')
    ns = catalog.ns_three(n)
    gamma, delta2 = catalog.pi_basis(n)
    pi = lc.induced_gram(ns, [gamma, delta2])
    disc_pi = lc.discriminant(pi)

    pi_gamma, pi_delta2 = pi.basis()
    complement = lc.orthogonal_complement(pi, pi_delta2)
    if len(complement) != 1:
        raise FamilyError(f'delta2 complement has rank {len(complement)}')
    h2 = complement[0]
    if lc.product(pi, h2, pi_gamma) < 0:
        h2 = -h2

    saturated = lc.saturation(ns, [gamma, delta2])
    pi_saturated = lc.discriminant(lc.induced_gram(ns, saturated)) == disc_pi

    d = lc.square(pi, h2)
    g = d // 2 + 1
    witness = pell.fundamental_negative(g - 1)
    if witness is None:
        raise FamilyError(f'no Pell witness for D = {g - 1}')

    record = FamilyRecord(
        n=n, d=d, g=g, ogrady_r=2 * n + 2,
        gram_pi=pi.gram, gamma=gamma, delta2=delta2, h2=h2,
        disc_pi=disc_pi, pell=witness,
        gamma_delta2=lc.product(ns, gamma, delta2),
        h2_square=lc.square(pi, h2),
        gram_polarized=lc.induced_gram(pi, [h2, pi_delta2]).gram,
        pi_saturated=pi_saturated)
    check_record(record)
    return record


def check_record(record: FamilyRecord):
    n, d, g, r = record.n, record.d, record.g, record.ogrady_r
    failures = []
    if d != degree(n) or d != 2 * (4 * (n + 1) ** 2 + 1):
        failures.append(f'd = {d} is not 8n^2 + 16n + 10')
    if 2 * g - 2 != d or g != r * r + 2:
        failures.append(f'g = {g} is not d/2 + 1 = r^2 + 2')
    if r != 2 * n + 2:
        failures.append(f'r = {r} is not 2n + 2')
    if record.disc_pi != -2 * d:
        failures.append(f'disc(Pi) = {record.disc_pi} is not -2d')
    if record.pell.norm() != -1 or record.pell.d != g - 1:
        failures.append(f'Pell witness {record.pell} does not solve D = g-1')
    if record.gram_polarized != ((d, 0), (0, -2)):
        failures.append(f'Gram in (h2, delta2) is {record.gram_polarized}')
    if failures:
        raise FamilyError(f'n = {n}: ' + '; '.join(failures))


def lemma_bbb_discriminant(n: int) -> LemmaDiscriminant:
    '''
    A (-2)-class E with (h,E) = 0 would span R0 = Zh + ZE inside R(n), but
    d(R0) = -20 is not index^2 d(R(n)) for any n >= 1.
    '''
    if n < 1:
        raise FamilyError(f'n must be at least 1, got {n}')
    disc_r = lc.discriminant(catalog.two_polarizations(n))
    disc_r0 = lc.discriminant(Lattice(R0_GRAM))
    return LemmaDiscriminant(
        disc_r=disc_r,
        contradiction_r0=not lc.sublattice_discriminant_test(disc_r0, disc_r))


def lemma_bbb_reflection_inequality(n: int, fh_bar: int) -> LemmaInequality:
    '''
    After reflecting h in a (-2)-curve, R' = Zf + Z h_bar has discriminant
    100 - (f,h_bar)^2, which beats d(R) = -n(n+20) as long as
    0 < (f,h_bar) < (f,h) = n + 10.
    '''
    if n < 1:
        raise FamilyError(f'n must be at least 1, got {n}')
    if not 0 < fh_bar < n + 10:
        raise RegimeError(f'(f,h_bar) = {fh_bar} outside 0 < (f,h_bar) < '
                          f'{n + 10}')
    r_prime = Lattice([[10, fh_bar], [fh_bar, 10]])
    disc_r_prime = lc.discriminant(r_prime)
    disc_r = lc.discriminant(catalog.two_polarizations(n))
    return LemmaInequality(disc_r_prime=disc_r_prime,
                           strict=disc_r_prime > disc_r)


def k3_embedding_sufficient(lattice: Lattice) -> bool:
    '''
    Sufficient test for a primitive embedding into the K3 lattice: even,
    nondegenerate, hyperbolic and of rank at most 10. False is inconclusive.
    '''
    rank = lattice.rank
    if rank < 1 or rank > EMBEDDING_RANK_BOUND:
        return False
    if not lc.is_even(lattice) or not lc.is_nondegenerate(lattice):
        return False
    return lc.signature(lattice) == (1, rank - 1, 0)


def ogrady_status(r: int) -> OgradyStatus:
    '''
    Where a genus g = r^2 + 2 stands with respect to antisymplectic
    involutions on the Hilbert square.
    '''
    if r < 0:
        raise FamilyError(f'r must be non-negative, got {r}')
    genus = r * r + 2
    kwargs = dict(r=r, genus=genus, degree=2 * genus - 2)
    if r == 0:
        return OgradyStatus(OgradyCase.KNOWN_R0, **kwargs)
    if r == 2:
        return OgradyStatus(OgradyCase.OGRADY_R2, **kwargs)
    if r % 2 == 0:
        n = r // 2 - 1
        return OgradyStatus(OgradyCase.EVEN_FAMILY, n=n, record=family(n),
                            **kwargs)
    note = 'studied separately' if r == 1 else None
    return OgradyStatus(OgradyCase.ODD_OPEN, note=note, **kwargs)
