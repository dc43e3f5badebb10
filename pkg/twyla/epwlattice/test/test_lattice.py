import random
import unittest

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twyla.epwlattice import catalog, verify
from twyla.epwlattice import lattice as lc
from twyla.epwlattice.lattice import (DependentBasis, DimensionMismatch,
                                      InvalidGram, Lattice, LatticeError,
                                      LatticeVector, ReflectionError,
                                      Signature, ZeroVector)


class LatticeTests(unittest.TestCase):

    def test_rejects_asymmetric_gram(self):
        with pytest.raises(InvalidGram):
            Lattice([[1, 2], [3, 4]])


    def test_rejects_ragged_gram(self):
        with pytest.raises(InvalidGram):
            Lattice([[1, 2], [2]])


    def test_vector_length_is_checked(self):
        u = catalog.hyperbolic_plane()
        with pytest.raises(DimensionMismatch):
            u.vector(1, 2, 3)


    def test_vector_arithmetic(self):
        ns = catalog.ns_hilbert_square(10)
        h, delta = ns.basis()
        assert (h - 2 * delta).coords == (1, -2)
        assert (delta * 3 + h).coords == (1, 3)
        assert -(h - delta) == delta - h
        assert not ns.zero()


    def test_vectors_of_different_lattices_do_not_mix(self):
        h = catalog.ns_hilbert_square(10).vector(1, 0)
        f = catalog.ns_hilbert_square(12).vector(1, 0)
        with pytest.raises(DimensionMismatch):
            h + f
        with pytest.raises(DimensionMismatch):
            lc.product(catalog.ns_hilbert_square(10), f, f)


class InvariantTests(unittest.TestCase):

    def test_products(self):
        ns = catalog.ns_hilbert_square(10)
        h, delta = ns.basis()
        assert lc.square(ns, h) == 10
        assert lc.square(ns, delta) == -2
        assert lc.product(ns, h, delta) == 0
        assert lc.square(ns, h - 2 * delta) == 2


    def test_discriminant(self):
        assert lc.discriminant(Lattice([[10, 11], [11, 10]])) == -21
        assert lc.discriminant(catalog.hyperbolic_plane()) == -1
        assert lc.discriminant(catalog.e8()) == 1


    def test_signature(self):
        assert lc.signature(catalog.hyperbolic_plane()) == (1, 1, 0)
        assert lc.signature(catalog.e8()) == (8, 0, 0)
        assert lc.signature(Lattice([[0, 0], [0, -3]])) == (0, 1, 1)
        assert str(Signature(20, 2, 0)) == '(20,2,0)'


    def test_parity(self):
        assert lc.is_even(catalog.e8())
        assert not lc.is_even(catalog.rank_one(3))
        assert lc.is_nondegenerate(catalog.hyperbolic_plane())
        assert not lc.is_nondegenerate(Lattice([[1, 1], [1, 1]]))


    def test_direct_sum(self):
        total = lc.direct_sum(catalog.hyperbolic_plane(), catalog.rank_one(-2))
        assert total.gram == ((0, 1, 0), (1, 0, 0), (0, 0, -2))
        assert lc.direct_sum().rank == 0


    def test_rescale(self):
        assert lc.rescale(catalog.rank_one(2), -1).gram == ((-2,),)
        with pytest.raises(LatticeError):
            lc.rescale(catalog.rank_one(2), 0)


    @given(st.integers(0, 2 ** 32), st.integers(1, 4))
    def test_signature_is_basis_independent(self, seed, rank):
        rng = random.Random(seed)
        lattice = verify.random_gram(rng, rank)
        m, m_inv = verify.random_unimodular(rng, rank)
        changed = verify.change_basis(lattice, m)
        assert lc.signature(changed) == lc.signature(lattice)
        assert lc.discriminant(changed) == lc.discriminant(lattice)
        assert verify.change_basis(changed, m_inv) == lattice


    @given(st.integers(0, 2 ** 32))
    def test_signature_is_additive(self, seed):
        rng = random.Random(seed)
        a = verify.random_gram(rng, rng.randint(0, 3))
        b = verify.random_gram(rng, rng.randint(0, 3))
        total = lc.direct_sum(a, b)
        assert lc.signature(total) == lc.signature(a) + lc.signature(b)
        assert lc.discriminant(total) == lc.discriminant(a) * lc.discriminant(b)


class ReflectionTests(unittest.TestCase):

    def test_negative_root_of_hyperbolic_plane(self):
        u = catalog.hyperbolic_plane()
        e = u.vector(1, -1)
        r = lc.reflection(u, e)
        assert r.matrix == ((0, 1), (1, 0))
        assert r(e) == -e
        assert (r @ r).is_identity()


    def test_positive_root(self):
        a1 = catalog.rank_one(2)
        r = lc.reflection(a1, a1.vector(1))
        assert r.matrix == ((-1,),)


    def test_rejects_other_squares(self):
        u = catalog.hyperbolic_plane()
        with pytest.raises(ReflectionError):
            lc.reflection(u, u.vector(1, 2))
        with pytest.raises(ReflectionError):
            lc.negated_reflection(u, u.vector(1, -1))


    def test_negated_reflection_fixes_the_root(self):
        ns = catalog.ns_hilbert_square(10)
        gamma = ns.vector(1, -2)
        j = lc.negated_reflection(ns, gamma)
        assert j(gamma) == gamma
        for w in lc.orthogonal_complement(ns, gamma):
            assert j(w) == -w
        assert (j @ j).is_identity()


    @given(st.integers(0, 2 ** 32))
    def test_random_roots(self, seed):
        lattice, e = verify.random_root(random.Random(seed))
        r = lc.reflection(lattice, e)
        assert lc.is_isometry(lattice, r.matrix)
        assert r(e) == -e
        for w in lc.orthogonal_complement(lattice, e):
            assert r(w) == w


class SublatticeTests(unittest.TestCase):

    def test_primitive(self):
        z2 = Lattice([[1, 0], [0, 1]])
        assert lc.is_primitive(z2, z2.vector(2, 3))
        assert not lc.is_primitive(z2, z2.vector(2, 4))
        with pytest.raises(ZeroVector):
            lc.is_primitive(z2, z2.zero())


    def test_orthogonal_complement(self):
        ns = catalog.ns_hilbert_square(10)
        complement = lc.orthogonal_complement(ns, ns.vector(1, -2))
        assert [w.coords for w in complement] == [(2, -5)]
        with pytest.raises(ZeroVector):
            lc.orthogonal_complement(ns, ns.zero())


    def test_complement_examples(self):
        u = catalog.hyperbolic_plane()
        complement = lc.orthogonal_complement(u, u.vector(1, 0))
        assert [w.coords for w in complement] == [(1, 0)]
        for d in [2, 10, 34]:
            ns = catalog.ns_hilbert_square(d)
            h, delta = ns.basis()
            assert lc.orthogonal_complement(ns, delta) == [h]


    def test_induced_gram(self):
        ns = catalog.ns_three(1)
        gamma, delta2 = catalog.pi_basis(1)
        assert lc.induced_gram(ns, [gamma, delta2]).gram == ((2, 8), (8, -2))
        with pytest.raises(DependentBasis):
            lc.induced_gram(ns, [gamma, 2 * gamma])


    def test_saturation(self):
        z2 = Lattice([[1, 0], [0, 1]])
        saturated = lc.saturation(z2, [z2.vector(2, 0)])
        assert [v.coords for v in saturated] == [(1, 0)]
        assert lc.same_span(saturated, [z2.vector(-1, 0)])
        assert not lc.same_span(saturated, [z2.vector(2, 0)])


    def test_saturating_twice_delta(self):
        ns = catalog.ns_hilbert_square(10)
        delta = ns.vector(0, 1)
        assert lc.induced_gram(ns, [2 * delta]).gram == ((-8,),)
        for d in [2, 10, 34]:
            ns = catalog.ns_hilbert_square(d)
            saturated = lc.saturation(ns, [2 * ns.vector(0, 1)])
            assert [v.coords for v in saturated] == [(0, 1)]


    def test_sublattice_discriminant_test(self):
        assert lc.sublattice_discriminant_test(-84, -21)
        assert not lc.sublattice_discriminant_test(-42, -21)
        assert not lc.sublattice_discriminant_test(-20, -21)
        with pytest.raises(LatticeError):
            lc.sublattice_discriminant_test(4, 0)


    def test_index_law(self):
        z2 = Lattice([[1, 0], [0, 1]])
        sub = lc.induced_gram(z2, [LatticeVector(z2, (2, 1)),
                                   LatticeVector(z2, (0, 3))])
        assert lc.discriminant(sub) == 36


class FormTests(unittest.TestCase):

    @given(st.integers(0, 2 ** 32),
           st.lists(st.integers(-50, 50), min_size=9, max_size=9),
           st.integers(-5, 5), st.integers(-5, 5))
    def test_product_is_symmetric_and_bilinear(self, seed, coords, a, b):
        lattice = verify.random_gram(random.Random(seed), 3, bound=9)
        x, y, z = (lattice.vector(*coords[i:i + 3]) for i in (0, 3, 6))
        assert lc.product(lattice, x, y) == lc.product(lattice, y, x)
        assert (lc.product(lattice, a * x + b * y, z) ==
                a * lc.product(lattice, x, z) + b * lc.product(lattice, y, z))


    def test_is_isometry(self):
        ns = catalog.ns_hilbert_square(10)
        assert lc.is_isometry(ns, [[9, 4], [-20, -9]])
        assert lc.is_isometry(ns, [[1, 0], [0, 1]])
        assert not lc.is_isometry(ns, [[2, 0], [0, 1]])
        with pytest.raises(DimensionMismatch):
            lc.is_isometry(ns, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


    def test_isometry_rejects_non_isometries(self):
        ns = catalog.ns_hilbert_square(10)
        with pytest.raises(LatticeError):
            lc.Isometry(ns, [[2, 0], [0, 1]])


    def test_rescale_examples(self):
        a1 = catalog.rank_one(1)
        assert lc.rescale(a1, 1) == a1
        assert lc.discriminant(lc.rescale(a1, 2)) == 2
