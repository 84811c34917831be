import itertools

import pytest
from hypothesis import given, settings, strategies as st

from maxdepth.errors import (
    CapExceededError,
    MalformedInputError,
    RegularityViolationError,
    RingMismatchError,
    UndefinedModuleError,
)
from maxdepth.ideals import (
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    associated_primes,
    colon,
    intersect,
    intersect_all,
    irreducible_decomposition,
    minimal_primes_of,
    minimalize,
    parse_generators,
    polarize,
    primary_decomposition,
    prime_ideal,
    quotient_by_variable,
    ring,
    specialize_polarization,
    tensor_join,
    unit_ideal,
    zero_ideal,
)
from maxdepth.regress import C8_PRIMES, c8_ideal


def mk(n, *exps):
    return MonomialIdeal(ring(n), tuple(Monomial(e) for e in exps))


small_ideals = st.builds(
    mk,
    st.just(3),
    *[
        st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
        for _ in range(3)
    ],
)
small_monomials = st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)).map(
    Monomial
)


class TestMinimalize:
    def test_divisible_generator_dropped(self):
        assert mk(3, (1, 1, 0), (1, 1, 1)) == mk(3, (1, 1, 0))

    def test_pairwise_incomparable_kept(self):
        I = mk(2, (2, 0), (1, 1), (0, 2))
        assert len(I.gens) == 3

    def test_c8_generators_already_minimal(self):
        I = c8_ideal()
        assert minimalize(I.ring, I.gens) == I
        assert len(I.gens) == 8

    def test_unit_collapses(self):
        assert mk(2, (0, 0), (1, 0)).is_unit

    def test_bad_length_rejected(self):
        with pytest.raises(MalformedInputError):
            mk(3, (1, 1))


class TestIntersect:
    def test_two_planes(self):
        left = mk(4, (1, 0, 0, 0), (0, 1, 0, 0))
        right = mk(4, (0, 0, 1, 0), (0, 0, 0, 1))
        assert intersect(left, right) == mk(
            4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)
        )

    def test_unit_is_identity(self):
        I = mk(2, (2, 0), (1, 1))
        assert intersect(I, unit_ideal(I.ring)) == I

    def test_c8_primes_intersect_to_edge_ideal(self):
        I = c8_ideal()
        primes = [prime_ideal(I.ring, PrimeSupport(p)) for p in C8_PRIMES]
        assert intersect_all(I.ring, primes) == I

    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            intersect(mk(2, (1, 0)), mk(3, (1, 0, 0)))

    @given(small_ideals, small_ideals)
    def test_commutative(self, I, J):
        assert intersect(I, J) == intersect(J, I)

    @given(small_ideals, small_ideals, small_ideals)
    @settings(max_examples=50)
    def test_associative(self, I, J, K):
        assert intersect(intersect(I, J), K) == intersect(I, intersect(J, K))

    @given(small_ideals)
    def test_idempotent(self, I):
        assert intersect(I, I) == I

    @given(small_ideals, small_ideals, small_monomials)
    def test_membership_oracle(self, I, J, m):
        # u lies in the intersection exactly when it lies in both
        assert intersect(I, J).contains(m) == (I.contains(m) and J.contains(m))


class TestColon:
    def test_basic(self):
        assert colon(mk(2, (2, 0), (1, 1)), Monomial((1, 0))) == mk(2, (1, 0), (0, 1))

    def test_by_one_is_identity(self):
        I = mk(2, (2, 0), (1, 1))
        assert colon(I, Monomial((0, 0))) == I

    def test_c8_colon_by_x1(self):
        I = c8_ideal()
        got = colon(I, Monomial((1,) + (0,) * 7))
        # x2 and x8 divide out; the edges not meeting x1 survive minimalization
        expect = parse_generators("x2,x8,x3*x4,x4*x5,x5*x6,x6*x7", nvars=8)
        assert got == expect

    @given(small_ideals, small_monomials, small_monomials)
    def test_membership_oracle(self, I, u, m):
        assert colon(I, u).contains(m) == I.contains(u.times(m))

    @given(small_ideals, small_monomials)
    def test_contains_ideal_and_unit_iff_member(self, I, u):
        J = colon(I, u)
        assert all(J.contains(g) for g in I.gens)
        if I.is_proper:
            assert J.is_unit == I.contains(u)


class TestAssociatedPrimes:
    def test_c8(self):
        assert associated_primes(c8_ideal()) == frozenset(
            PrimeSupport(p) for p in C8_PRIMES
        )

    def test_embedded_prime(self):
        I = mk(2, (2, 0), (1, 1))
        assert associated_primes(I) == frozenset(
            {PrimeSupport((0,)), PrimeSupport((0, 1))}
        )

    def test_zero_ideal_gives_zero_prime(self):
        assert associated_primes(zero_ideal(ring(3))) == frozenset({PrimeSupport(())})

    def test_unit_rejected(self):
        with pytest.raises(UndefinedModuleError):
            associated_primes(unit_ideal(ring(2)))

    def test_search_cap(self):
        I = mk(2, (40, 0), (0, 40))
        with pytest.raises(CapExceededError):
            associated_primes(I, search_cap=100)

    @given(small_ideals)
    @settings(max_examples=60)
    def test_contains_minimal_primes(self, I):
        if I.is_unit:
            return
        ass = associated_primes(I)
        assert minimal_primes_of(I) <= ass
        # every associated prime contains the annihilator support
        for p in ass:
            for g in I.gens:
                assert set(g.support) & set(p.vars) or not g.support


class TestIrreducibleDecomposition:
    def test_embedded_example(self):
        comps = irreducible_decomposition(mk(2, (2, 0), (1, 1)))
        assert set(comps) == {mk(2, (1, 0)), mk(2, (2, 0), (0, 1))}

    def test_prime_is_its_own_decomposition(self):
        p = prime_ideal(ring(3), PrimeSupport((0, 2)))
        assert irreducible_decomposition(p) == (p,)

    def test_squarefree_components_are_minimal_primes(self):
        I = c8_ideal()
        comps = irreducible_decomposition(I)
        got = {PrimeSupport.of(i for g in c.gens for i in g.support) for c in comps}
        assert got == set(minimal_primes_of(I))

    @given(small_ideals)
    @settings(max_examples=60, deadline=None)
    def test_intersects_back_and_pure_powers(self, I):
        if I.is_unit:
            return
        comps = irreducible_decomposition(I)
        assert intersect_all(I.ring, comps) == I
        for c in comps:
            assert all(len(g.support) == 1 for g in c.gens)

    @given(small_ideals)
    @settings(max_examples=40, deadline=None)
    def test_primary_components_intersect_back(self, I):
        if I.is_unit:
            return
        comps = primary_decomposition(I)
        assert intersect_all(I.ring, [c for _, c in comps]) == I


class TestPolarize:
    def test_squarefree_fixed_point(self):
        I = c8_ideal()
        pol = polarize(I)
        assert pol.added_vars == 0
        assert pol.ideal == I

    def test_square_splits(self):
        pol = polarize(mk(1, (2,)))
        assert pol.added_vars == 1
        assert pol.ideal.gens == (Monomial((1, 1)),)
        assert pol.ideal.ring.names == ("x1_1", "x1_2")

    @given(small_ideals)
    @settings(max_examples=60)
    def test_specialization_roundtrip(self, I):
        if I.is_unit:
            return
        pol = polarize(I)
        assert pol.ideal.is_squarefree
        assert specialize_polarization(pol, I.ring) == I


class TestTensorJoin:
    def test_small_join(self):
        left = mk(1, (1,))
        right = mk(1, (1,))
        J = tensor_join(left, right)
        assert J.ring.n == 2
        assert J == mk(2, (1, 0), (0, 1))

    def test_ass_is_pairwise_union(self):
        A = mk(2, (1, 1))
        B = mk(2, (1, 0), (0, 1))
        J = tensor_join(A, B)
        expect = frozenset(
            PrimeSupport.of(tuple(p.vars) + tuple(v + 2 for v in q.vars))
            for p in associated_primes(A)
            for q in associated_primes(B)
        )
        assert associated_primes(J) == expect


class TestQuotientByVariable:
    def test_cone_section(self):
        # cone with apex x3 over the two-point complex on x1, x2
        I = mk(3, (1, 1, 0))
        got = quotient_by_variable(I, 2)
        assert got == mk(2, (1, 1))

    def test_zerodivisor_rejected_with_witness(self):
        I = mk(2, (1, 1))
        with pytest.raises(RegularityViolationError) as err:
            quotient_by_variable(I, 0)
        assert 0 in err.value.witness.vars


class TestParsing:
    def test_strict_and_convenience_agree(self):
        assert parse_generators("x1*x2,x2*x3") == parse_generators("x1x2,x2x3")

    def test_exponents(self):
        I = parse_generators("x1^2*x2")
        assert I.gens == (Monomial((2, 1)),)

    def test_nvars_padding(self):
        assert parse_generators("x1", nvars=4).ring.n == 4

    def test_zero_ideal_needs_count(self):
        with pytest.raises(MalformedInputError):
            parse_generators("")
        assert parse_generators("", nvars=2).is_zero

    def test_garbage_rejected(self):
        with pytest.raises(MalformedInputError):
            parse_generators("y1*y2")
