"""Entourage base on the rational line: clauses, composition, controls."""

import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ulat.entourages import (
    CLAUSES,
    DIAG,
    HIGH,
    LOW,
    RealEntourage,
    compose_case_analysis,
    compose_triple_violation,
    entourage_clause,
    real_entourage_compose_check,
    real_entourage_contains,
)

rationals = st.fractions(
    min_value=F(-50), max_value=F(50), max_denominator=12
)


def test_clause_names_and_examples():
    assert entourage_clause(3, F(1, 3), F(2, 3)) == DIAG
    assert entourage_clause(3, 3, 100) == HIGH
    assert entourage_clause(3, -7, -3) == LOW
    assert entourage_clause(3, 0, 1) is None
    # diag wins when several clauses apply
    assert entourage_clause(1, 5, 5) == DIAG


def test_clause_rejects_nonpositive_index():
    with pytest.raises(ValueError):
        entourage_clause(0, 0, 0)
    with pytest.raises(ValueError):
        RealEntourage(-1)


def test_membership_matches_clause():
    u = RealEntourage(4)
    assert (F(1, 8), F(1, 4)) in u
    assert (4, 9) in u
    assert (-4, -100) in u
    assert (0, 1) not in u
    assert real_entourage_contains(4, "1/8", "1/4")


def test_membership_is_symmetric_and_reflexive():
    u = RealEntourage(5)
    pts = [F(0), F(1, 5), F(7), F(-9), F(13, 3)]
    for x in pts:
        assert (x, x) in u
        for y in pts:
            assert ((x, y) in u) == ((y, x) in u)


def test_nine_case_analysis_holds_at_small_and_large_n():
    for n in (1, 2, 3, 64, 10**6):
        cases = compose_case_analysis(n)
        assert len(cases) == 9
        assert {(c.left, c.right) for c in cases} == {
            (a, b) for a in CLAUSES for b in CLAUSES
        }
        assert all(c.holds for c in cases)
        vacuous = {(c.left, c.right) for c in cases if c.conclusion == "vacuous"}
        assert vacuous == {(HIGH, LOW), (LOW, HIGH)}


def test_case_facts_are_exact_comparisons():
    (diag_case,) = [
        c for c in compose_case_analysis(2) if (c.left, c.right) == (DIAG, DIAG)
    ]
    assert diag_case.conclusion == DIAG
    assert diag_case.facts == (("1/(2n) + 1/(2n) <= 1/n", True),)


def test_compose_check_is_exact():
    rng = random.Random(7)
    for n in (1, 2, 64):
        verdict = real_entourage_compose_check(n, samples=90, rng=rng)
        assert verdict.status == "exact"
        assert f"n={n}" in verdict.detail


def test_compose_check_without_sampling():
    verdict = real_entourage_compose_check(5, samples=0)
    assert verdict.status == "exact"


def test_unhalved_index_admits_a_violation():
    # (0, 1/2) and (1/2, 1) sit in U_2 but (0, 1) does not: composing U_2
    # with itself escapes U_2, so the index really must be halved.
    assert compose_triple_violation(2, 0, F(1, 2), 1)
    assert not compose_triple_violation(2, 0, F(1, 4), F(1, 2))


def test_violation_requires_both_legs_inside():
    assert not compose_triple_violation(2, 0, 10, 1)


@given(
    x=rationals,
    y=rationals,
    z=rationals,
    n=st.integers(min_value=1, max_value=9),
)
def test_halved_composition_never_escapes(x, y, z, n):
    if real_entourage_contains(2 * n, x, y) and real_entourage_contains(2 * n, y, z):
        assert real_entourage_contains(n, x, z)


@given(
    x=rationals,
    y=rationals,
    z=rationals,
    n=st.integers(min_value=1, max_value=9),
)
def test_lattice_ops_with_common_element_stay_inside(x, y, z, n):
    if real_entourage_contains(n, x, y):
        assert real_entourage_contains(n, max(x, z), max(y, z))
        assert real_entourage_contains(n, min(x, z), min(y, z))
