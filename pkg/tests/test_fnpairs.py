import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fnlab.errors import (
    IndexOutOfRange,
    MapNotTotal,
    NotComparable,
    NotPermutation,
    NoWitness,
)
from fnlab.fnmaps import (
    FnPair,
    collapse,
    interpolant_lookup,
    trivial_pair,
    verify_pair,
    verify_single,
    wellorder_map,
)
from fnlab.gen import random_poset, random_total_map, random_valid_pair
from fnlab.poset import antichain, chain, diamond


class TestVerifySingle:
    def test_full_sets_valid(self):
        P = chain(2)
        assert verify_single(P, [{0, 1}, {0, 1}]).valid

    def test_singletons_invalid(self):
        v = verify_single(chain(2), [{0}, {1}])
        assert not v.valid and v.violation[:2] == (0, 1)

    def test_bst_style_chain3(self):
        assert verify_single(chain(3), [{0, 1}, {1}, {1, 2}]).valid

    def test_not_total(self):
        with pytest.raises(MapNotTotal):
            verify_single(chain(2), [{0}])

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            verify_single(chain(2), [{0}, {5}])


class TestVerifyPair:
    def test_downsets_valid(self):
        P = chain(2)
        pair = FnPair.from_sets(P, [{0}, {0, 1}], [{0}, {0, 1}])
        assert verify_pair(pair).valid

    def test_singletons_clause_one(self):
        v = verify_pair(FnPair.from_sets(chain(2), [{0}, {1}], [{0}, {1}]))
        assert not v.valid and v.violation == (0, 1, 1)

    def test_trivial_pair_on_diamond(self):
        assert verify_pair(trivial_pair(diamond())).valid

    def test_interpolants_satisfy_clauses(self):
        pair = trivial_pair(diamond())
        v = verify_pair(pair, with_interpolants=True)
        P = pair.poset
        for (p, q), (r, s) in v.interpolants.items():
            assert P.leq(p, r) and P.leq(r, q)
            assert P.leq(p, s) and P.leq(s, q)
            assert r in pair.f_set(p) and r in pair.g_set(q)
            assert s in pair.g_set(p) and s in pair.f_set(q)


class TestInvariants:
    @given(st.integers(0, 10**6), st.integers(1, 6))
    def test_forced_membership(self, seed, n):
        rng = random.Random(seed)
        P = random_poset(n, rng)
        pair = FnPair(P, random_total_map(P, rng), random_total_map(P, rng))
        if verify_pair(pair).valid:
            for x in range(n):
                assert x in pair.f_set(x) and x in pair.g_set(x)

    @given(st.integers(0, 10**6), st.integers(1, 6))
    def test_clause_symmetry(self, seed, n):
        rng = random.Random(seed)
        P = random_poset(n, rng)
        f = random_total_map(P, rng)
        g = random_total_map(P, rng)
        assert verify_pair(FnPair(P, f, g)).valid == verify_pair(FnPair(P, g, f)).valid

    @given(st.integers(0, 10**6), st.integers(1, 6))
    def test_pointwise_enlargement_preserves_validity(self, seed, n):
        rng = random.Random(seed)
        P = random_poset(n, rng)
        pair = random_valid_pair(P, rng)
        f = list(pair.f)
        g = list(pair.g)
        f[rng.randrange(n)] |= 1 << rng.randrange(n)
        g[rng.randrange(n)] |= 1 << rng.randrange(n)
        assert verify_pair(FnPair(P, tuple(f), tuple(g))).valid

    @given(st.integers(0, 10**6), st.integers(1, 6))
    def test_single_pair_equivalence(self, seed, n):
        rng = random.Random(seed)
        P = random_poset(n, rng)
        h = random_total_map(P, rng)
        assert verify_single(P, h).valid == verify_pair(FnPair(P, h, h)).valid


class TestCollapse:
    def test_trivial_pair_collapses_to_full(self):
        P = diamond()
        h = collapse(trivial_pair(P))
        assert h == tuple(P.full_mask() for _ in range(4))
        assert verify_single(P, h).valid

    def test_collapse_of_doubled_single_is_itself(self):
        P = chain(3)
        h = wellorder_map(P, [1, 0, 2])
        assert collapse(FnPair(P, h, h)) == h

    @given(st.integers(0, 10**6))
    def test_random_valid_pair_collapses_valid(self, seed):
        rng = random.Random(seed)
        P = random_poset(6, rng)
        pair = random_valid_pair(P, rng)
        assert verify_single(P, collapse(pair)).valid


class TestWellorderMap:
    @given(st.integers(0, 10**6), st.integers(1, 7))
    def test_always_valid(self, seed, n):
        rng = random.Random(seed)
        P = random_poset(n, rng)
        order = list(range(n))
        rng.shuffle(order)
        h = wellorder_map(P, order)
        assert verify_single(P, h).valid
        for pos, x in enumerate(order):
            assert h[x].bit_count() == pos + 1

    def test_reversed_chain2(self):
        h = wellorder_map(chain(2), [1, 0])
        assert h[1] == 0b10 and h[0] == 0b11
        assert verify_single(chain(2), h).valid

    def test_singleton(self):
        assert wellorder_map(chain(1), [0]) == (1,)

    def test_not_permutation(self):
        with pytest.raises(NotPermutation):
            wellorder_map(chain(2), [0, 0])


class TestInterpolantLookup:
    def test_reflexive_pair(self):
        pair = trivial_pair(diamond())
        assert interpolant_lookup(pair, 2, 2) == (2, 2)

    def test_diamond_trivial_bottom_top(self):
        # g is singleton, so r is forced to the top; s to the bottom.
        pair = trivial_pair(diamond())
        assert interpolant_lookup(pair, 0, 3) == (3, 0)

    def test_chain2_asymmetric_pair(self):
        pair = FnPair.from_sets(chain(2), [{0}, {1}], [{0, 1}, {0, 1}])
        assert verify_pair(pair).valid
        assert interpolant_lookup(pair, 0, 1) == (0, 1)

    def test_not_comparable(self):
        with pytest.raises(NotComparable):
            interpolant_lookup(trivial_pair(antichain(2)), 0, 1)

    def test_no_witness_on_invalid_pair(self):
        pair = FnPair.from_sets(chain(2), [{0}, {1}], [{0}, {1}])
        with pytest.raises(NoWitness):
            interpolant_lookup(pair, 0, 1)
