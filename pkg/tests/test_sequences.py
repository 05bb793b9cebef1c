"""Sequence descriptors, bound claims, witnesses, and the term grammar."""

from fractions import Fraction as F

import pytest

from ulat.carriers import chain_lattice
from ulat.exact import RatAltSeq
from ulat.sequences import (
    BoundClaim,
    EventuallyConstant,
    MetricCertificate,
    O1Witness,
    O2Witness,
    Periodic,
    TailClosedForm,
    UnitVectors,
    chain_bound,
    cofinite_chain_sequence,
    constant_sequence,
    eventually_constant_sequence,
    o2_from_o1,
    parse_scalar_series,
    parse_sequence_term,
    periodic_sequence,
    sequence_of,
    series_sequence,
    singleton_atom_sequence,
    unit_vector_sequence,
)
from ulat.spaces import (
    NO_BOUND,
    C00Space,
    C00Vec,
    FinCofAlgebra,
    FinCofSet,
    QLine,
)

Q = QLine()
A = FinCofAlgebra()
V = C00Space()


def test_sequences_are_one_indexed():
    s = constant_sequence(Q, 3)
    assert s.value(1) == F(3)
    with pytest.raises(ValueError):
        s.value(0)


def test_eventually_constant_factory():
    s = eventually_constant_sequence(Q, (F(5), F(4)), F(1), "settle")
    assert [s.value(k) for k in (1, 2, 3, 9)] == [F(5), F(4), F(1), F(1)]
    assert s.descriptor == EventuallyConstant(F(1), 3)
    assert s.descriptor_matches(range(1, 12))


def test_periodic_factory_and_prefix_rule():
    s = periodic_sequence(Q, (F(1), F(2)), "blink", from_index=2, prefix=(F(9),))
    assert [s.value(k) for k in (1, 2, 3, 4, 5)] == [F(9), F(1), F(2), F(1), F(2)]
    assert s.descriptor == Periodic((F(1), F(2)), 2)
    assert s.descriptor_matches(range(1, 9))
    with pytest.raises(ValueError):
        periodic_sequence(Q, (F(1),), "bad", from_index=3, prefix=(F(0),))
    with pytest.raises(ValueError):
        Periodic((), 1)


def test_series_and_builtin_streams_match_descriptors():
    harmonic = series_sequence(Q, RatAltSeq.inv_index(), "1/k")
    assert harmonic.value(4) == F(1, 4)
    assert harmonic.descriptor == TailClosedForm(RatAltSeq.inv_index())

    units = unit_vector_sequence(V)
    assert units.value(3) == C00Vec.unit(3)
    assert units.descriptor == UnitVectors()
    assert units.descriptor_matches((1, 2, 7))

    atoms = singleton_atom_sequence(A)
    assert atoms.value(5) == FinCofSet.singleton(5)
    assert atoms.descriptor_matches((1, 4))

    chain = cofinite_chain_sequence(A)
    assert chain.value(3) == FinCofSet.cofinite_complement({1, 2, 3})
    assert chain.descriptor_matches((1, 2, 6))


def test_descriptor_mismatch_is_detected():
    lying = sequence_of(Q, lambda k: F(k), "lying", EventuallyConstant(F(1), 1))
    assert not lying.descriptor_matches((1, 2))
    assert lying.descriptor_matches((1,))
    bare = sequence_of(Q, lambda k: F(k), "bare")
    assert bare.descriptor_matches(range(1, 5))


# ---------------------------------------------------------------------------
# chain_bound


def test_bound_of_bounded_climb_is_exact():
    # x_k = 1 - 1/k climbs to 1; the sup is the limit, the inf the first term
    climb = series_sequence(Q, RatAltSeq.const(1) - RatAltSeq.inv_index(), "climb")
    up = chain_bound(climb, "sup")
    assert (up.value, up.exact) == (F(1), True)
    assert up.detail == "monotone limit"
    lo = chain_bound(climb, "inf")
    assert (lo.value, lo.exact) == (F(0), True)
    assert chain_bound(climb, "inf", k0=3).value == F(2, 3)


def test_unbounded_walk_has_no_bound_in_carrier():
    walk = series_sequence(Q, RatAltSeq.index(), "walk")
    up = chain_bound(walk, "sup")
    assert up.value is NO_BOUND
    assert up.exact and up.detail == "increases without bound"
    assert chain_bound(walk, "inf").value == F(1)
    down = chain_bound(series_sequence(Q, -RatAltSeq.index(), "-walk"), "inf")
    assert down.value is NO_BOUND and down.detail == "decreases without bound"


def test_alternating_tail_is_undecided_without_monotonicity():
    alt = series_sequence(Q, RatAltSeq.alt() * RatAltSeq.inv_index(), "alt-harmonic")
    claim = chain_bound(alt, "sup")
    assert claim.value is None and not claim.decided


def test_fincof_tail_bounds_use_the_set_oracle():
    chain = cofinite_chain_sequence(A)
    assert chain_bound(chain, "inf").value == FinCofSet.empty()
    assert chain_bound(chain, "sup", k0=5).value == FinCofSet.cofinite_complement(
        {1, 2, 3, 4, 5}
    )
    atoms = singleton_atom_sequence(A)
    assert chain_bound(atoms, "sup", k0=5).value == FinCofSet.cofinite_complement(
        {1, 2, 3, 4}
    )
    assert chain_bound(atoms, "inf").value == FinCofSet.empty()


def test_unit_vector_bounds():
    units = unit_vector_sequence(V)
    assert chain_bound(units, "inf").value == C00Vec.zero()
    assert chain_bound(units, "sup").value is NO_BOUND


def test_descriptorless_fold_on_finite_carrier_is_inexact():
    L = chain_lattice(4)
    seq = sequence_of(L, lambda k: min(k, 2), "capped")
    claim = chain_bound(seq, "sup", horizon=8)
    assert claim.value == 2 and not claim.exact
    assert "fold" in claim.detail


def test_descriptorless_infinite_carrier_is_undecided():
    seq = sequence_of(Q, lambda k: F(1, k), "opaque")
    claim = chain_bound(seq, "sup")
    assert claim.value is None and not claim.exact


def test_chain_bound_rejects_unknown_kind():
    with pytest.raises(ValueError):
        chain_bound(constant_sequence(Q, 0), "max")


# ---------------------------------------------------------------------------
# witnesses and certificates


def test_o2_replay_shifts_the_sandwich_start():
    lower = series_sequence(Q, -RatAltSeq.inv_index(), "lo")
    upper = series_sequence(Q, RatAltSeq.inv_index(), "hi")
    replay = o2_from_o1(O1Witness(lower, upper, start_index=3))
    assert replay.offset == 2
    assert replay.k_of(1) == 3
    assert replay.lower.value(1) == lower.value(3)
    assert replay.upper.value(4) == upper.value(6)
    assert isinstance(replay.upper.descriptor, TailClosedForm)
    assert replay.upper.descriptor.series.eval(1) == F(1, 3)


def test_o2_replay_from_the_start_keeps_terms():
    lower = constant_sequence(Q, -1)
    upper = constant_sequence(Q, 1)
    replay = o2_from_o1(O1Witness(lower, upper))
    assert replay.offset == 0
    assert replay.lower is lower and replay.upper is upper


def test_affine_witness_rejects_negative_offset():
    lower = constant_sequence(Q, 0)
    with pytest.raises(ValueError):
        O2Witness.affine(lower, lower, -1)


def test_metric_certificate_clamps_to_one():
    cert = MetricCertificate.uniform(lambda eps: int(1 / eps) - 5)
    assert cert.at(F(1, 2)) == 1
    assert cert.at(F(1, 100)) == 95
    assert cert.at("1/100") == 95
    named = MetricCertificate(lambda eps, name: 7 if name == "abs" else 1)
    assert named.at(F(1), "abs") == 7


# ---------------------------------------------------------------------------
# term grammar


def test_scalar_grammar_round_trips():
    assert parse_scalar_series("k").eval(7) == F(7)
    assert parse_scalar_series("1/k").eval(4) == F(1, 4)
    assert parse_scalar_series("alt").eval(3) == F(-1)
    assert parse_scalar_series("2/3").eval(9) == F(2, 3)
    assert parse_scalar_series(5).eval(2) == F(5)
    combo = parse_scalar_series(["+", "k", ["*", "alt", "1/k"]])
    assert combo.eval(2) == F(5, 2)
    assert parse_scalar_series(["-", "k"]).eval(3) == F(-3)
    assert parse_scalar_series(["-", "k", 1]).eval(3) == F(2)


def test_scalar_grammar_rejects_junk():
    with pytest.raises(ValueError):
        parse_scalar_series(True)
    with pytest.raises(ValueError):
        parse_scalar_series(["/", "k", 2])
    with pytest.raises(ValueError):
        parse_scalar_series([])
    with pytest.raises(ValueError):
        parse_scalar_series("q")


def test_sequence_terms_build_carrier_streams():
    atoms = parse_sequence_term(["singleton-atoms"], A)
    assert atoms.value(2) == FinCofSet.singleton(2)
    prefix = parse_sequence_term(["atom-prefix"], A)
    assert prefix.value(3) == FinCofSet.finite({1, 2, 3})
    drop = parse_sequence_term(["drop-atom-prefix"], A)
    assert drop.value(2) == FinCofSet.cofinite_complement({1, 2})
    const = parse_sequence_term(["set", [2, 4]], A)
    assert const.value(9) == FinCofSet.finite({2, 4})
    coset = parse_sequence_term(["coset", [1]], A)
    assert coset.value(1) == FinCofSet.cofinite_complement({1})
    units = parse_sequence_term(["unit-vectors"], V)
    assert units.value(2) == C00Vec.unit(2)


def test_vector_terms_and_scalar_fallback():
    from ulat.spaces import QVec

    plane = QVec(2)
    vec = parse_sequence_term(["vec", "1/k", ["-", "1/k"]], plane)
    assert vec.value(2) == (F(1, 2), F(-1, 2))
    scalar = parse_sequence_term("1/k", Q, "harmonic")
    assert scalar.value(5) == F(1, 5)
    assert scalar.name == "harmonic"
    with pytest.raises(ValueError):
        parse_sequence_term(["spiral"], Q)
