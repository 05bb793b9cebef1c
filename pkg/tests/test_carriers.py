import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ulat.carriers import (
    FiniteLattice,
    NotALattice,
    chain_lattice,
    check_distributive,
    check_group_axioms,
    check_lattice_axioms,
    diamond_lattice,
    divisor_lattice,
    load_finite_lattice,
    pentagon_lattice,
    powerset_lattice,
    sublattices,
)
from ulat.spaces import QVec


class TestStandardLattices:
    def test_powerset_shape(self):
        L = powerset_lattice(3)
        assert len(L.elements()) == 8
        assert L.bottom == frozenset()
        assert L.top == frozenset({1, 2, 3})
        assert L.meet(frozenset({1, 2}), frozenset({2, 3})) == frozenset({2})
        assert L.join(frozenset({1}), frozenset({3})) == frozenset({1, 3})
        assert L.leq(frozenset({1}), frozenset({1, 2}))

    def test_divisor_lattice_is_gcd_lcm(self):
        L = divisor_lattice(60)
        assert len(L.elements()) == 12
        assert L.bottom == 1 and L.top == 60
        assert L.meet(12, 10) == 2
        assert L.join(4, 6) == 12

    def test_chain(self):
        L = chain_lattice(4)
        assert L.elements() == [0, 1, 2, 3]
        assert L.meet(1, 3) == 1 and L.join(1, 3) == 3

    def test_pentagon_and_diamond_are_not_distributive(self):
        for L in (pentagon_lattice(), diamond_lattice()):
            res = check_distributive(L)
            assert not res.holds
            assert res.witness is not None
        for L in (powerset_lattice(3), divisor_lattice(60), chain_lattice(5)):
            assert check_distributive(L).holds

    def test_lattice_axioms_hold_exhaustively_on_small_carriers(self):
        for L in (powerset_lattice(2), pentagon_lattice(), diamond_lattice()):
            assert check_lattice_axioms(L, L.elements()).holds


class TestConstruction:
    def test_from_leq_divisibility(self):
        L = FiniteLattice.from_leq("div6", [1, 2, 3, 6], lambda a, b: b % a == 0)
        assert L.meet(2, 3) == 1 and L.join(2, 3) == 6

    def test_from_leq_rejects_non_lattice(self):
        # two maximal elements: pair {b, c} has no join
        with pytest.raises(NotALattice) as info:
            FiniteLattice.from_leq("vee", ["a", "b", "c"],
                                   lambda x, y: x == y or x == "a")
        assert info.value.pair == ("b", "c")
        assert info.value.missing == "join"

    def test_load_finite_lattice_roundtrip(self):
        doc = {
            "name": "square",
            "elements": ["bot", "x", "y", "top"],
            "covers": [["bot", "x"], ["bot", "y"], ["x", "top"], ["y", "top"]],
        }
        L = load_finite_lattice(doc)
        assert L.name == "square"
        assert L.meet("x", "y") == "bot"
        assert L.join("x", "y") == "top"

    def test_load_finite_lattice_diagnostics(self):
        with pytest.raises(NotALattice):
            load_finite_lattice({"elements": [], "covers": []})
        with pytest.raises(NotALattice):
            load_finite_lattice({"elements": ["a", "b", "c"],
                                 "covers": [["a", "b"], ["a", "c"]]})
        with pytest.raises(NotALattice):
            load_finite_lattice(["not", "an", "object"])


class TestSublattices:
    def test_every_nonempty_chain_subset_is_a_sublattice(self):
        L = chain_lattice(3)
        found = sorted(sublattices(L))
        assert len(found) == 7  # all nonempty subsets of a 3-chain

    def test_enumeration_matches_direct_closure_scan(self):
        L = diamond_lattice()
        elems = L.elements()
        direct = set()
        for r in range(1, len(elems) + 1):
            for subset in itertools.combinations(elems, r):
                closed = all(
                    L.meet(a, b) in subset and L.join(a, b) in subset
                    for a in subset for b in subset)
                if closed:
                    direct.add(tuple(sorted(subset)))
        yielded = {tuple(sorted(S)) for S in sublattices(L)}
        assert yielded == direct

    def test_max_size_filter(self):
        L = powerset_lattice(2)
        for S in sublattices(L, max_size=2):
            assert len(S) <= 2


class TestGroupCarrier:
    def test_qvec_group_axioms(self):
        G = QVec(3)
        rng = random.Random(5)
        xs = [G.sample(rng) for _ in range(12)]
        assert check_group_axioms(G, xs).holds

    def test_abs_and_parts(self):
        G = QVec(2)
        x = (F(3), F(-2))
        assert G.abs_(x) == (F(3), F(2))
        assert G.pos_part(x) == (F(3), F(0))
        assert G.neg_part(x) == (F(0), F(2))
        assert G.sub(G.pos_part(x), G.neg_part(x)) == x


@given(st.lists(st.sampled_from(divisor_lattice(60).elements()),
                min_size=1, max_size=6))
def test_divisor_lattice_axioms_on_sampled_tuples(xs):
    L = divisor_lattice(60)
    assert check_lattice_axioms(L, xs).holds


@given(st.sets(st.integers(min_value=1, max_value=4)),
       st.sets(st.integers(min_value=1, max_value=4)),
       st.sets(st.integers(min_value=1, max_value=4)))
def test_powerset_distributive_identity(a, b, c):
    L = powerset_lattice(4)
    x, y, z = frozenset(a), frozenset(b), frozenset(c)
    assert L.meet(x, L.join(y, z)) == L.join(L.meet(x, y), L.meet(x, z))
