'''
Check groups run by `epwlattice verify`. Each group raises VerificationFailed
with the first counterexample it meets; randomized groups draw from a seeded
generator so the report is reproducible.
'''
import random
from typing import Callable, List, Tuple

from sympy import isprime
from sympy.solvers.diophantine.diophantine import diop_DN

from twyla.epwlattice import catalog, family, linalg, pell
from twyla.epwlattice import lattice as lc
from twyla.epwlattice.catalog import CatalogError, CatalogId
from twyla.epwlattice.family import FamilyError
from twyla.epwlattice.lattice import Lattice, LatticeError, LatticeVector
from twyla.epwlattice.pell import PellError

SEED = 20140301
PELL_D_MAX = 2000
PELL_X_MAX = 10 ** 4
PRIME_LIMIT = 10 ** 4
LEMMA_N_MAX = 1000
INEQUALITY_N_MAX = 20
CATALOG_N_MAX = 200
INVOLUTION_N_MAX = 100
WITNESS_N_MAX = 50
REFLECTION_SAMPLES = 1000
PROPERTY_SAMPLES = 200


class VerificationFailed(Exception):
    pass


def expect(condition: bool, counterexample: str):
    if not condition:
        raise VerificationFailed(counterexample)


def random_unimodular(rng: random.Random, rank: int,
                      steps: int=8) -> Tuple[linalg.Matrix, linalg.Matrix]:
    '''
    random_unimodular returns (M, M^-1) for a random product of elementary
    integer moves: column additions and sign flips.
    '''
    m = [list(row) for row in linalg.identity(rank)]
    inv = [list(row) for row in linalg.identity(rank)]
    for _ in range(steps):
        if rank > 1 and rng.random() < 0.8:
            i, j = rng.sample(range(rank), 2)
            c = rng.choice((-2, -1, 1, 2))
            # M <- M (I + c E_ij), M^-1 <- (I - c E_ij) M^-1
            for row in m:
                row[j] += c * row[i]
            inv[i] = [a - c * b for a, b in zip(inv[i], inv[j])]
        else:
            i = rng.randrange(rank)
            for row in m:
                row[i] = -row[i]
            inv[i] = [-a for a in inv[i]]
    return linalg.freeze(m), linalg.freeze(inv)


def random_gram(rng: random.Random, rank: int, bound: int=4,
                even: bool=False) -> Lattice:
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        for j in range(i, rank):
            entry = rng.randint(-bound, bound)
            if i == j and even:
                entry *= 2
            gram[i][j] = gram[j][i] = entry
    return Lattice(gram)


def change_basis(lattice: Lattice, m: linalg.Matrix) -> Lattice:
    return Lattice(linalg.matmul(linalg.matmul(linalg.transpose(m),
                                               lattice.gram), m))


def random_root(rng: random.Random) -> Tuple[Lattice, LatticeVector]:
    '''
    A random even lattice U + (even block) in a scrambled basis, together
    with a class of square +2 or -2 taken from the hyperbolic plane.
    '''
    extra = rng.randint(0, 3)
    base = lc.direct_sum(catalog.hyperbolic_plane(),
                         random_gram(rng, extra, even=True))
    sign = rng.choice((1, -1))
    root = (1, sign) + (0,) * extra
    m, inv = random_unimodular(rng, base.rank)
    scrambled = change_basis(base, m)
    return scrambled, LatticeVector(scrambled, linalg.matvec(inv, root))


def check_involution_images(n_max: int):
    report = family.epw_involution(10, 2)
    expect(report.image_of_h.coords == (9, -20),
           f'j(f) = {report.image_of_h.coords}, expected 9f - 20delta')
    expect(report.image_of_delta.coords == (4, -9),
           f'j(delta) = {report.image_of_delta.coords}, expected 4f - 9delta')
    expect(family.invariant_class(10, 2).coords == (1, -2),
           'fixed class of j is not h - 2delta')


def check_fujiki(n_max: int):
    top = family.epw_top_intersection()
    expect(top == 12, f'gamma^4 = {top}, expected 12')
    square = family.fujiki_degree_to_bb(top, family.FUJIKI_CONSTANT)
    expect(square == 2, f'(gamma,gamma) = {square}, expected 2')


def check_family_identities(n_max: int):
    for n in range(1, n_max + 1):
        record = family.family(n)
        d = family.degree(n)
        ns = catalog.ns_three(n)
        expect(record.gamma_delta2 == 4 * n + 4,
               f'n={n}: (gamma,delta2) = {record.gamma_delta2}')
        expect(record.disc_pi == -2 * (8 * n * n + 16 * n + 10),
               f'n={n}: disc(Pi) = {record.disc_pi}')
        # The same class computed inside NS3(n) rather than inside Pi.
        h2 = record.gamma + (2 * n + 2) * record.delta2
        expect(record.h2_square == d and lc.square(ns, h2) == d,
               f'n={n}: (h2,h2) = {record.h2_square}, expected {d}')
        expect(record.h2.coords == (1, 2 * n + 2),
               f'n={n}: h2 = {record.h2.coords} in Pi coordinates')
        expect(record.g == (2 * n + 2) ** 2 + 2,
               f'n={n}: g = {record.g}')
        expect(record.pi_saturated, f'n={n}: Pi is not saturated')


def check_involutions(n_max: int):
    for n in range(1, min(n_max, INVOLUTION_N_MAX) + 1):
        report = family.epw_involution(family.degree(n), 2 * n + 2)
        j = report.matrix
        ns = j.lattice
        h, delta = ns.basis()
        gamma = h - (2 * n + 2) * delta
        expect((j @ j).is_identity(), f'n={n}: j^2 is not the identity')
        expect(lc.is_isometry(ns, j.matrix), f'n={n}: j is not an isometry')
        expect(j(gamma) == gamma, f'n={n}: j does not fix gamma')
        for w in lc.orthogonal_complement(ns, gamma):
            expect(j(w) == -w, f'n={n}: j does not negate {w.coords}')


def check_necessary_condition(n_max: int):
    for n in range(1, min(n_max, WITNESS_N_MAX) + 1):
        result = family.necessary_condition(family.degree(n))
        expect(result.solvable, f'n={n}: Pell condition fails')
        expect((result.witness.y, result.witness.x) == (2 * n + 2, 1),
               f'n={n}: minimal witness {result.witness}')
    expect(not family.necessary_condition(12).solvable,
           'd=12 reported solvable')


def check_pell(n_max: int):
    expect(pell.fundamental_negative(5) == (5, 2, 1), 'D=5 minimal solution')
    first = [(s.y, s.x) for s in pell.enumerate_negative(5, 3)]
    expect(first == [(2, 1), (38, 17), (682, 305)],
           f'D=5 first solutions {first}')
    expect(not pell.is_solvable_negative(34), 'D=34 reported solvable')
    for d in range(2, PELL_D_MAX + 1):
        if pell.is_square(d):
            continue
        fundamental = pell.fundamental_negative(d)
        reference = [(int(y), int(x)) for y, x in diop_DN(d, -1)]
        expect(reference == ([] if fundamental is None
                             else [(fundamental.y, fundamental.x)]),
               f'D={d}: solver {fundamental}, sympy {reference}')
        brute = pell.brute_force_negative(d, PELL_X_MAX)
        if brute is not None:
            expect(fundamental == brute,
                   f'D={d}: solver {fundamental}, brute force {brute}')
        elif fundamental is not None:
            expect(fundamental.x > PELL_X_MAX,
                   f'D={d}: brute force missed {fundamental}')
        if fundamental is None:
            continue
        solutions = pell.enumerate_negative(d, 3)
        expect(all(a.x < b.x and a.y < b.y
                   for a, b in zip(solutions, solutions[1:])),
               f'D={d}: enumeration is not increasing')
        for solution in solutions:
            y, x = pell.positive_solution(solution)
            expect(y * y - d * x * x == 1, f'D={d}: norm algebra {solution}')
    for p in range(2, PRIME_LIMIT):
        if isprime(p):
            expect(pell.prime_criterion(p) == pell.is_solvable_negative(p),
                   f'p={p}: prime criterion disagrees with the solver')


def check_lemma_bbb(n_max: int):
    for n in range(1, LEMMA_N_MAX + 1):
        result = family.lemma_bbb_discriminant(n)
        expect(result.disc_r == -n * (n + 20), f'n={n}: d(R) = {result.disc_r}')
        expect(result.contradiction_r0, f'n={n}: R0 fits inside R(n)')
        expect(family.k3_embedding_sufficient(catalog.two_polarizations(n)),
               f'n={n}: R(n) fails the embedding criterion')
    for n in range(1, INEQUALITY_N_MAX + 1):
        for fh_bar in range(1, n + 10):
            result = family.lemma_bbb_reflection_inequality(n, fh_bar)
            expect(result.strict, f'n={n}, (f,h_bar)={fh_bar}: not strict')


def check_catalog(n_max: int):
    expected = {
        'LAMBDA0': (22, (20, 2, 0), True),
        'K3': (22, (3, 19, 0), True),
        'I22_2': (24, (22, 2, 0), False),
    }
    for name, (rank, sig, even) in expected.items():
        report = catalog.catalog_report(CatalogId.parse(name))
        expect((report.rank, report.signature, report.even) == (rank, sig, even),
               f'{name}: {report}')
    expect(catalog.catalog_report(CatalogId('K3')).discriminant == -1,
           'K3 discriminant is not -1')
    for n in range(1, CATALOG_N_MAX + 1):
        disc_pi = lc.discriminant(catalog.build(CatalogId('PI', n)))
        expect(disc_pi == -2 * family.degree(n), f'n={n}: disc PI = {disc_pi}')
        disc_r = lc.discriminant(catalog.build(CatalogId('R', n)))
        expect(disc_r == -n * (n + 20), f'n={n}: disc R = {disc_r}')
    for d in range(2, 2 * CATALOG_N_MAX + 1, 2):
        report = catalog.catalog_report(CatalogId('NS_HILB', d))
        expect(report.even and report.signature == (1, 1, 0),
               f'NS_HILB({d}): {report}')


def check_reflections(n_max: int):
    rng = random.Random(SEED)
    for _ in range(REFLECTION_SAMPLES):
        lattice, e = random_root(rng)
        r = lc.reflection(lattice, e)
        label = f'{lattice!r}, e={e.coords}'
        expect((r @ r).is_identity(), f'{label}: reflection is not involutive')
        expect(lc.is_isometry(lattice, r.matrix), f'{label}: not an isometry')
        expect(r(e) == -e, f'{label}: e does not map to -e')
        complement = lc.orthogonal_complement(lattice, e)
        for w in complement:
            expect(r(w) == w, f'{label}: {w.coords} is not fixed')
        if lc.square(lattice, e) == 2:
            j = lc.negated_reflection(lattice, e)
            expect(j(e) == e, f'{label}: negated reflection moves e')
            for w in complement:
                expect(j(w) == -w, f'{label}: {w.coords} is not negated')


def check_index_law(n_max: int):
    rng = random.Random(SEED + 1)
    for _ in range(PROPERTY_SAMPLES):
        rank = rng.randint(1, 4)
        lattice = random_gram(rng, rank)
        rows = [[rng.randint(-3, 3) for _ in range(rank)] for _ in range(rank)]
        det = linalg.determinant(rows)
        if det == 0:
            continue
        sub = lc.induced_gram(lattice, [LatticeVector(lattice, row)
                                        for row in rows])
        expect(lc.discriminant(sub) == det * det * lc.discriminant(lattice),
               f'{lattice!r}, B={rows}: index law fails')


def check_saturation(n_max: int):
    rng = random.Random(SEED + 2)
    for _ in range(PROPERTY_SAMPLES):
        rank = rng.randint(2, 4)
        lattice = random_gram(rng, rank)
        k = rng.randint(1, rank)
        rows = [[rng.randint(-4, 4) for _ in range(rank)] for _ in range(k)]
        if linalg.rank(rows) != k:
            continue
        basis = [LatticeVector(lattice, row) for row in rows]
        saturated = lc.saturation(lattice, basis)
        expect(lc.same_span(lc.saturation(lattice, saturated), saturated),
               f'{rows}: saturation is not idempotent')
        expect(len(saturated) == k, f'{rows}: saturation changed the rank')
        v = LatticeVector(lattice, rows[0])
        complement = lc.orthogonal_complement(lattice, v)
        expect(all(lc.product(lattice, w, v) == 0 for w in complement),
               f'{lattice!r}, v={v.coords}: complement is not orthogonal')
        if complement:
            expect(lc.same_span(lc.saturation(lattice, complement), complement),
                   f'{lattice!r}, v={v.coords}: complement is not saturated')


def check_signatures(n_max: int):
    rng = random.Random(SEED + 3)
    for _ in range(PROPERTY_SAMPLES):
        a = random_gram(rng, rng.randint(1, 4))
        b = random_gram(rng, rng.randint(0, 3))
        m, _ = random_unimodular(rng, a.rank)
        expect(lc.signature(change_basis(a, m)) == lc.signature(a),
               f'{a!r}: signature depends on the basis')
        total = lc.direct_sum(a, b)
        expect(lc.signature(total) == lc.signature(a) + lc.signature(b),
               f'{a!r} + {b!r}: signature does not add')
        expect(lc.discriminant(total) ==
               lc.discriminant(a) * lc.discriminant(b),
               f'{a!r} + {b!r}: discriminant does not multiply')


def check_products(n_max: int):
    rng = random.Random(SEED + 4)
    for _ in range(PROPERTY_SAMPLES):
        rank = rng.randint(1, 4)
        lattice = random_gram(rng, rank, bound=9)
        x, y, z = (lattice.vector(*(rng.randint(-50, 50) for _ in range(rank)))
                   for _ in range(3))
        a, b = rng.randint(-5, 5), rng.randint(-5, 5)
        label = f'{lattice!r}, x={x.coords}, y={y.coords}'
        expect(lc.product(lattice, x, y) == lc.product(lattice, y, x),
               f'{label}: product is not symmetric')
        expect(lc.product(lattice, a * x + b * y, z) ==
               a * lc.product(lattice, x, z) + b * lc.product(lattice, y, z),
               f'{label}, z={z.coords}, a={a}, b={b}: product is not linear')


def check_erratum(n_max: int):
    y, x = pell.closed_form_d5(1)
    expect((y, x) == (49, 22) and y * y - 5 * x * x == -19,
           f'closed form at n=1 gives ({y},{x})')
    second = pell.enumerate_negative(5, 2)[1]
    expect((second.y, second.x) == (38, 17) and second.norm() == -1,
           f'second D=5 solution {second}')


CHECKS = [
    ('involution images', check_involution_images),
    ('fujiki pipeline', check_fujiki),
    ('family identities', check_family_identities),
    ('involution soundness', check_involutions),
    ('necessary condition', check_necessary_condition),
    ('pell suite', check_pell),
    ('lemma checks', check_lemma_bbb),
    ('catalog', check_catalog),
    ('reflections', check_reflections),
    ('index law', check_index_law),
    ('saturation', check_saturation),
    ('signatures', check_signatures),
    ('products', check_products),
    ('closed form erratum', check_erratum),
]


def run_checks(n_max: int,
               printer: Callable[[str], None],
               error_printer: Callable[[str], None],
               checks=None) -> List[Tuple[str, Exception]]:
    '''
    run_checks runs every group and reports PASS/FAIL lines; it returns the
    failures in the order they happened.
    '''
    if n_max < 1:
        raise VerificationFailed(f'n_max must be at least 1, got {n_max}')
    failures = []
    for name, check in (checks if checks is not None else CHECKS):
        try:
            check(n_max)
        except (VerificationFailed, AssertionError, LatticeError, PellError,
                FamilyError, CatalogError) as e:
            error_printer(f'FAIL {name}')
            failures.append((name, e))
        else:
            printer(f'PASS {name}')
    return failures
