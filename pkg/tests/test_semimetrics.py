import random
from fractions import Fraction as F

import pytest

from ulat.carriers import chain_lattice, diamond_lattice, powerset_lattice
from ulat.exact import EXT_INF
from ulat.semimetrics import (
    SemimetricFamily,
    derived_semimetric,
    discrete_semimetric,
    interval_agreement,
    kernel_partition,
    l1_semimetric,
    line_abs_semimetric,
    load_distance_table,
    order_interval,
    ph_criterion,
    ph_criterion_detail,
    pullback_semimetric,
    quotient,
    table_semimetric,
    ustar_family,
    validate_semimetric,
    zero_semimetric,
)
from ulat.spaces import QLine, QVec
from ulat.truncation import TruncationPair


def s(*atoms):
    return frozenset(atoms)


class TestValidation:
    def test_finite_validation_is_exhaustive(self):
        L = powerset_lattice(2)
        v = validate_semimetric(discrete_semimetric(L))
        assert v.status == "exact"
        assert "4^3" in v.detail

    def test_symbolic_validation_needs_rng_and_samples(self):
        Q = QLine()
        v = validate_semimetric(line_abs_semimetric(Q), budget=50,
                                rng=random.Random(0))
        assert v.status == "verified-at-horizon"

    def test_triangle_violation_is_caught_with_witness(self):
        L = chain_lattice(3)
        bad = table_semimetric("bad", L, {(0, 2): F(5), (0, 1): F(1), (1, 2): F(1)})
        v = validate_semimetric(bad)
        assert v.status == "falsified"
        assert v.witness == ("triangle", 0, 1, 2)

    def test_contraction_violation_is_caught(self):
        L = chain_lattice(3)
        # meet with 1 moves the pair (0, 2) to (0, 1), whose distance is
        # larger here: lattice operations must never spread points apart
        bad = table_semimetric("spread", L,
                               {(0, 1): F(3), (1, 2): F(3), (0, 2): F(1)})
        v = validate_semimetric(bad)
        assert v.status == "falsified"
        assert v.witness[0] in ("join-contraction", "meet-contraction")


class TestDerived:
    def test_frozen_powerset_value(self):
        L = powerset_lattice(2)
        d = discrete_semimetric(L)
        p = TruncationPair.of(L, s(1), s(1, 2))
        dp = derived_semimetric(d, p)
        assert dp(s(), s(2)) == 1
        assert dp(s(), s(1)) == 0
        assert dp.origin == ("clamp", p, d)

    def test_derived_never_exceeds_base(self):
        V = QVec(2)
        d = l1_semimetric(V)
        p = TruncationPair.of(V, (F(-1), F(-1)), (F(1), F(1)))
        dp = derived_semimetric(d, p)
        rng = random.Random(7)
        for _ in range(200):
            x, y = V.sample(rng), V.sample(rng)
            assert dp(x, y) <= d(x, y)

    def test_rejects_non_canonical_pairs(self):
        L = powerset_lattice(2)
        with pytest.raises(ValueError):
            derived_semimetric(discrete_semimetric(L),
                               TruncationPair.of(L, s(1), s(2)))

    def test_ustar_family_enumerates_derived_members(self):
        L = chain_lattice(3)
        D = SemimetricFamily.of("discrete", discrete_semimetric(L))
        J = [TruncationPair.of(L, 0, 1), TruncationPair.of(L, 0, 2)]
        star = ustar_family(D, J)
        assert star.name == "discrete*"
        assert len(star.members) == 2


class TestKernelAndQuotient:
    def test_collapse_kernel_blocks_are_frozen(self):
        L = chain_lattice(4)
        target = chain_lattice(3)
        fold = {0: 0, 1: 1, 2: 1, 3: 2}
        D = SemimetricFamily.of("collapse", pullback_semimetric(
            "collapse", L, lambda x: fold[x], discrete_semimetric(target)))
        ker = kernel_partition(L, D)
        assert ker.blocks == ((0,), (1, 2), (3,))
        assert not ker.is_discrete
        assert ker.class_of(2) == (1, 2)
        assert ker.representative(2) == 1

    def test_collapse_quotient_is_hausdorff_three_chain(self):
        L = chain_lattice(4)
        target = chain_lattice(3)
        fold = {0: 0, 1: 1, 2: 1, 3: 2}
        D = SemimetricFamily.of("collapse", pullback_semimetric(
            "collapse", L, lambda x: fold[x], discrete_semimetric(target)))
        ker = kernel_partition(L, D)
        q = quotient(L, ker, D)
        assert len(q.carrier.elements()) == 3
        assert q.hausdorff
        assert q.project(2) == q.project(1)
        res = kernel_partition(q.carrier, q.induced)
        assert res.is_discrete

    def test_non_congruent_kernel_is_rejected_with_witness(self):
        M3 = diamond_lattice()
        # glue bottom to one atom only: joining with another atom separates
        elems = M3.elements()
        glued = {M3.index_of("0"), M3.index_of("a")}
        table = {}
        for i in range(len(elems)):
            for j in range(i + 1, len(elems)):
                table[(i, j)] = F(0) if {i, j} == glued else F(1)
        D = SemimetricFamily.of("glue", table_semimetric("glue", M3, table))
        with pytest.raises(ValueError) as info:
            kernel_partition(M3, D)
        assert "congruence" in str(info.value)

    def test_discrete_kernel_quotient_is_identity(self):
        L = powerset_lattice(2)
        D = SemimetricFamily.of("discrete", discrete_semimetric(L))
        ker = kernel_partition(L, D)
        assert ker.is_discrete
        q = quotient(L, ker, D)
        assert len(q.carrier.elements()) == 4


class TestIntervalAgreement:
    def test_exact_self_agreement(self):
        L = chain_lattice(2)
        D = SemimetricFamily.of("discrete", discrete_semimetric(L))
        p = TruncationPair.of(L, 0, 1)
        v = interval_agreement(D, D, p)
        assert v.status == "exact"
        assert "mutual domination" in v.detail

    def test_zero_family_cannot_dominate_discrete(self):
        L = chain_lattice(2)
        disc = SemimetricFamily.of("discrete", discrete_semimetric(L))
        zero = SemimetricFamily.of("zero", zero_semimetric(L))
        p = TruncationPair.of(L, 0, 1)
        v = interval_agreement(disc, zero, p)
        assert v.status == "falsified"
        name, gap, x, y = v.witness
        assert name == "discrete" and gap == 1 and {x, y} == {0, 1}

    def test_order_interval_enumerates_the_window(self):
        L = powerset_lattice(2)
        p = TruncationPair.of(L, s(1), s(1, 2))
        assert sorted(order_interval(L, p), key=sorted) == [s(1), s(1, 2)]

    def test_requires_finite_carrier(self):
        Q = QLine()
        D = SemimetricFamily.of("abs", line_abs_semimetric(Q))
        with pytest.raises(ValueError):
            interval_agreement(D, D, TruncationPair.of(Q, F(-1), F(1)))


class TestRecoveryCriterion:
    def test_three_chain_needs_both_ends(self):
        L = chain_lattice(3)
        D = SemimetricFamily.of("discrete", discrete_semimetric(L))
        assert ph_criterion(L, [0, 2], D)
        assert ph_criterion(L, [0, 1, 2], D)
        assert not ph_criterion(L, [0], D)
        assert not ph_criterion(L, [0, 1], D)

    def test_detail_reports_the_failing_element(self):
        L = chain_lattice(3)
        D = SemimetricFamily.of("discrete", discrete_semimetric(L))
        det = ph_criterion_detail(L, [0, 1], D)
        assert not det.hausdorff
        assert det.family_hausdorff
        assert not det.recovery_ok
        assert det.failing_element == 2
        assert not det.kernel_hausdorff

    def test_non_hausdorff_family_fails_criterion(self):
        L = chain_lattice(3)
        D = SemimetricFamily.of("zero", zero_semimetric(L))
        det = ph_criterion_detail(L, [0, 2], D)
        assert not det.hausdorff and not det.family_hausdorff

    def test_rejects_non_sublattices(self):
        L = powerset_lattice(2)
        D = SemimetricFamily.of("discrete", discrete_semimetric(L))
        with pytest.raises(ValueError):
            ph_criterion(L, [s(1), s(2)], D)  # missing meet and join
        with pytest.raises(ValueError):
            ph_criterion(L, [], D)

    def test_agreement_holds_on_nondistributive_carriers(self):
        # the clamp kernel is not a congruence there, but discreteness is
        # still the right notion and must agree with the criterion
        N5 = diamond_lattice()
        D = SemimetricFamily.of("discrete", discrete_semimetric(N5))
        assert ph_criterion(N5, N5.elements(), D)
        assert not ph_criterion(N5, ["0", "a"], D)


class TestDistanceTables:
    def test_load_and_evaluate(self):
        L = chain_lattice(3)
        doc = {
            "carrier": "chain3",
            "distances": [[0, 1, "1/2"], [1, 2, "1/2"], [0, 2, "1"]],
        }
        d = load_distance_table(doc, carriers={"chain3": L})
        assert d(0, 2) == 1
        assert d(1, 0) == F(1, 2)
        assert d(2, 2) == 0
        assert validate_semimetric(d).status == "exact"

    def test_inf_entries(self):
        L = chain_lattice(2)
        doc = {"carrier": "c", "distances": [[0, 1, "inf"]]}
        d = load_distance_table(doc, carriers={"c": L})
        assert d(0, 1) == EXT_INF

    def test_bad_documents_are_rejected(self):
        L = chain_lattice(2)
        with pytest.raises(ValueError):
            load_distance_table({"distances": []}, carriers={"c": L})
        with pytest.raises(ValueError):
            load_distance_table({"carrier": "missing", "distances": []},
                                carriers={"c": L})
