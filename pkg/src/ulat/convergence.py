"""Certificate-based convergence oracles.

Each oracle grades its answer: exact when a symbolic or exhaustive argument
decides the claim, verified-at-horizon when only a finite prefix was
checked, falsified with a concrete witness, inconclusive otherwise.  The
descriptors attached to sequences are what make the exact grade reachable;
without one, the oracles degrade honestly instead of overclaiming.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence as Seq

from .carriers import CarrierMismatch, GroupCarrier
from .entourages import real_entourage_contains
from .exact import EXT_INF, ExtValue, frac_floor, rat
from .semimetrics import LatticeSemimetric, SemimetricFamily
from .sequences import (BoundClaim, EventuallyConstant, MetricCertificate,
                        O1Witness, O2Witness, Periodic, SequenceFamily,
                        TailClosedForm, UnitVectors, chain_bound)
from .spaces import (C00Vec, CofiniteFilterChain, EvLinSeq, EvLinSpace,
                     FinCofSet, SingletonAtoms, NO_BOUND)
from .truncation import TruncationPair, truncate_f
from .verdicts import Verdict

DEFAULT_HORIZON = 10_000
DEFAULT_EPS_GRID = tuple(Fraction(1, 2 ** i) for i in range(11))


# ---------------------------------------------------------------------------
# Bound-claim grading shared by the order-convergence oracles


def _grade_bound(seq: SequenceFamily, kind: str, target, k0: int,
                 horizon: int) -> Verdict:
    """Grade the claim sup/inf {seq(k) : k >= k0} = target."""
    L = seq.carrier
    claim: BoundClaim = chain_bound(seq, kind, k0, horizon=min(horizon, 512))
    label = f"{kind} of {seq.name}"
    if claim.value is NO_BOUND:
        return Verdict.falsified(witness=(kind, NO_BOUND), detail=f"{label} does not exist")
    if claim.value is not None:
        if claim.value == target:
            if claim.exact:
                return Verdict.exact(detail=f"{label}: {claim.detail}")
            return Verdict.at_horizon(horizon, detail=f"{label}: {claim.detail}")
        if claim.exact:
            return Verdict.falsified(witness=(kind, claim.value),
                                     detail=f"{label} is {claim.value!r}, not the limit")
    # Undecided or a non-exact fold mismatch: a term on the wrong side of the
    # target still falsifies, because the bound would have to dominate it.
    for k in range(k0, min(horizon, 256) + 1):
        v = seq.value(k)
        if kind == "sup" and not L.leq(v, target):
            return Verdict.falsified(witness=(kind, k, v),
                                     detail=f"term {k} is not below the claimed supremum")
        if kind == "inf" and not L.leq(target, v):
            return Verdict.falsified(witness=(kind, k, v),
                                     detail=f"term {k} is not above the claimed infimum")
    return Verdict.inconclusive(detail=f"{label} undecided ({claim.detail})")


# ---------------------------------------------------------------------------
# O1: monotone sandwich


def verify_O1(seq: SequenceFamily, x, w: O1Witness,
              horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Check the sandwich y_k <= x_k <= z_k with monotone y, z and bound
    claims sup y = x = inf z.

    The sandwich and monotonicity are checked index by index up to the
    horizon (exactly, but only on that prefix) unless all three sequences
    are eventually constant, in which case the check is complete and exact.
    Bound claims go through the carrier's bound oracle.
    """
    L = seq.carrier
    if w.lower.carrier is not L or w.upper.carrier is not L:
        raise CarrierMismatch("witness sequences must live on the sequence's carrier")
    x = L.check_element(x)
    k0 = w.start_index

    descs = (seq.descriptor, w.lower.descriptor, w.upper.descriptor)
    symbolic = all(isinstance(d, EventuallyConstant) for d in descs)
    if symbolic:
        stop = max(max(d.from_index for d in descs), k0) + 1
        grade_on_success = Verdict.exact(detail="eventually constant sandwich")
    else:
        stop = horizon
        grade_on_success = Verdict.at_horizon(horizon, detail="sandwich checked to horizon")

    prev_lo = prev_hi = None
    for k in range(k0, stop + 1):
        lo, hi, xv = w.lower.value(k), w.upper.value(k), seq.value(k)
        if prev_lo is not None and not L.leq(prev_lo, lo):
            return Verdict.falsified(witness=("lower-monotone", k), detail="lower witness decreased")
        if prev_hi is not None and not L.leq(hi, prev_hi):
            return Verdict.falsified(witness=("upper-monotone", k), detail="upper witness increased")
        if not (L.leq(lo, xv) and L.leq(xv, hi)):
            return Verdict.falsified(witness=("sandwich", k), detail="sandwich violated")
        if not L.leq(lo, x):
            return Verdict.falsified(witness=("lower-exceeds-limit", k),
                                     detail="lower witness not below the limit")
        if not L.leq(x, hi):
            return Verdict.falsified(witness=("upper-undercuts-limit", k),
                                     detail="upper witness not above the limit")
        prev_lo, prev_hi = lo, hi

    parts = [grade_on_success,
             _grade_bound(w.lower, "sup", x, k0, horizon),
             _grade_bound(w.upper, "inf", x, k0, horizon)]
    return Verdict.weakest(parts)


# ---------------------------------------------------------------------------
# O2: eventual containment in witness intervals


def _series_of(seq: SequenceFamily):
    d = seq.descriptor
    return d.series if isinstance(d, TailClosedForm) else None


def _o2_symbolic_line(seq, w: O2Witness) -> Optional[Verdict]:
    """Exact containment on the rational line via single-variable reduction.

    With K(j) = j + c and a nondecreasing lower chain m, the two-variable
    claim (for all j, all k >= j + c: m_j <= x_k) reduces to the
    single-variable tail fact x_{t+c} >= m_t for all t: any j <= k - c has
    m_j <= m_{k-c}.  Dually for the upper chain.
    """
    xs, ms, ns = _series_of(seq), _series_of(w.lower), _series_of(w.upper)
    if xs is None or ms is None or ns is None or w.offset is None:
        return None
    c = w.offset
    ok_m, bad_m = ms.nondecreasing_from(1)
    if not ok_m:
        return Verdict.falsified(witness=("lower-monotone", bad_m), detail="lower chain decreased")
    ok_n, bad_n = ns.nonincreasing_from(1)
    if not ok_n:
        return Verdict.falsified(witness=("upper-monotone", bad_n), detail="upper chain increased")
    low_ok, low_bad = (xs.shift(c) - ms).nonneg_from(1)
    if not low_ok:
        return Verdict.falsified(witness=("containment", low_bad, low_bad + c),
                                 detail="term fell below the lower chain")
    high_ok, high_bad = (ns - xs.shift(c)).nonneg_from(1)
    if not high_ok:
        return Verdict.falsified(witness=("containment", high_bad, high_bad + c),
                                 detail="term exceeded the upper chain")
    return Verdict.exact(detail="containment decided symbolically on the line")


def _o2_symbolic_fincof(seq, w: O2Witness) -> Optional[Verdict]:
    """Exact containment for the singleton stream inside the shrinking
    cofinite chain: {k} avoids {1..j} precisely when k > j, which the
    eventual index K(j) = j + c with c >= 1 guarantees."""
    upper_d = w.upper.descriptor
    lower_d = w.lower.descriptor
    if not (isinstance(seq.descriptor, SingletonAtoms)
            and isinstance(upper_d, CofiniteFilterChain)
            and upper_d.within == FinCofSet.universe()
            and isinstance(lower_d, EventuallyConstant)
            and w.lower.carrier.normalize(lower_d.value) == FinCofSet.empty()
            and lower_d.from_index == 1
            and w.offset is not None and w.offset >= 1):
        return None
    return Verdict.exact(detail="singleton avoids the dropped prefix once k > j")


def _o2_symbolic_evconst(seq, w: O2Witness) -> Optional[Verdict]:
    """Exact containment when sequence and chains are eventually constant."""
    descs = (seq.descriptor, w.lower.descriptor, w.upper.descriptor)
    if not all(isinstance(d, EventuallyConstant) for d in descs):
        return None
    L = seq.carrier
    j_stop = max(w.lower.descriptor.from_index, w.upper.descriptor.from_index) + 1
    k_stop = seq.descriptor.from_index
    for j in range(1, j_stop + 1):
        start = max(w.k_of(j), 1)
        for k in range(start, max(k_stop, start) + 1):
            if not (L.leq(w.lower.value(j), seq.value(k))
                    and L.leq(seq.value(k), w.upper.value(j))):
                return Verdict.falsified(witness=("containment", j, k),
                                         detail="interval containment violated")
    return Verdict.exact(detail="eventually constant containment")


def verify_O2(seq: SequenceFamily, x, w: O2Witness,
              horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Check sup(lower chain) = x = inf(upper chain) and the eventual
    containment x_k in [m_j, n_j] for k >= K(j).

    Containment is decided symbolically where the descriptors support it
    (rational line with affine K, the finite/cofinite singleton stream,
    eventually constant data); otherwise a budgeted prefix is checked and
    the verdict is graded at the horizon.
    """
    L = seq.carrier
    if w.lower.carrier is not L or w.upper.carrier is not L:
        raise CarrierMismatch("witness chains must live on the sequence's carrier")
    x = L.check_element(x)

    containment = (_o2_symbolic_line(seq, w)
                   or _o2_symbolic_fincof(seq, w)
                   or _o2_symbolic_evconst(seq, w))
    if containment is None:
        j_budget = min(horizon, 96)
        for j in range(1, j_budget + 1):
            start = max(w.k_of(j), 1)
            probes = set(range(start, min(start + 48, horizon) + 1))
            step = start
            while step <= horizon:
                probes.add(step)
                step *= 2
            probes.update(h for h in range(horizon - 4, horizon + 1) if h >= start)
            mj, nj = w.lower.value(j), w.upper.value(j)
            for k in sorted(probes):
                xv = seq.value(k)
                if not (L.leq(mj, xv) and L.leq(xv, nj)):
                    return Verdict.falsified(witness=("containment", j, k),
                                             detail="interval containment violated")
        containment = Verdict.at_horizon(horizon, detail="containment checked on a budgeted prefix")
    if not containment.ok:
        return containment

    parts = [containment,
             _grade_bound(w.lower, "sup", x, 1, horizon),
             _grade_bound(w.upper, "inf", x, 1, horizon)]
    return Verdict.weakest(parts)


# ---------------------------------------------------------------------------
# Eventual constancy as an O1 decision procedure


def decide_O1_eventual_constancy(seq: SequenceFamily, x,
                                 horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Decide O1-convergence on carriers where it reduces to eventual
    constancy: the finite/cofinite algebra (its order intervals are finite
    in the relevant direction) and finite lattices (monotone witness
    sequences there are eventually constant).

    Exact when a descriptor settles constancy symbolically.
    """
    L = seq.carrier
    from .spaces import FinCofAlgebra
    if not (isinstance(L, FinCofAlgebra) or L.is_finite):
        raise ValueError(f"eventual-constancy reduction does not apply to {L.name!r}")
    x = L.check_element(x)
    d = seq.descriptor

    if isinstance(d, EventuallyConstant):
        value = L.normalize(d.value)
        if value == x:
            return Verdict.exact(detail=f"constant from index {d.from_index}")
        return Verdict.falsified(witness=(d.from_index, value),
                                 detail="eventually constant at a different value")
    if isinstance(d, Periodic):
        distinct = {L.normalize(v) for v in d.values}
        if len(distinct) > 1:
            i = d.from_index
            return Verdict.falsified(witness=(i, i + 1),
                                     detail="periodic with more than one value, never constant")
        value = next(iter(distinct))
        if value == x:
            return Verdict.exact(detail="periodic with a single value")
        return Verdict.falsified(witness=(d.from_index, value),
                                 detail="eventually constant at a different value")
    if isinstance(d, SingletonAtoms):
        return Verdict.falsified(witness=(1, 2),
                                 detail="distinct singletons forever, never constant")

    prev = seq.value(1)
    last_change = None
    for k in range(2, horizon + 1):
        cur = seq.value(k)
        if cur != prev:
            last_change = k
            prev = cur
    if last_change is not None and last_change > horizon - 2:
        return Verdict.falsified(witness=(last_change - 1, last_change), horizon=horizon,
                                 detail="still changing at the horizon")
    stable_from = last_change if last_change is not None else 1
    if prev == x:
        return Verdict.at_horizon(horizon, detail=f"constant from index {stable_from} to horizon")
    return Verdict.inconclusive(detail="stable at a different value within the horizon")


# ---------------------------------------------------------------------------
# Truncated sequences and unbounded order convergence


def truncate_sequence(seq: SequenceFamily, p: TruncationPair) -> SequenceFamily:
    """The image sequence k -> clamp_p(x_k), with its descriptor transformed
    whenever the clamp's effect on the tail is decidable."""
    L = seq.carrier
    d = seq.descriptor
    out = None
    if isinstance(d, EventuallyConstant):
        out = EventuallyConstant(truncate_f(L, p, L.normalize(d.value)), d.from_index)
    elif isinstance(d, Periodic):
        out = Periodic(tuple(truncate_f(L, p, L.normalize(v)) for v in d.values), d.from_index)
    elif isinstance(d, TailClosedForm):
        series, a, b = d.series, rat(p.low), rat(p.high)
        hit_top = series.eventually_geq(b)
        hit_bottom = series.eventually_leq(a)
        if hit_top is not None:
            out = EventuallyConstant(L.normalize(b), hit_top)
        elif hit_bottom is not None:
            out = EventuallyConstant(L.normalize(a), hit_bottom)
        elif series.eventually_geq(a) == 1 and series.eventually_leq(b) == 1:
            out = d
    elif isinstance(d, UnitVectors):
        supports = [v.max_support() for v in (p.low, p.high) if v.support]
        zero_image = truncate_f(L, p, C00Vec.zero())
        out = EventuallyConstant(zero_image, max(supports, default=0) + 1)

    return SequenceFamily(f"clamp({seq.name})", L,
                          lambda k: truncate_f(L, p, seq.value(k)), out)


def pairs_from_positives(G: GroupCarrier, x, positives) -> list[TruncationPair]:
    """The two clamp pairs per positive cap a: (x - a, x) and (x, x + a)."""
    x = G.check_element(x)
    pairs = []
    for a in positives:
        a = G.check_element(a)
        if G.neg_part(a) != G.zero:
            raise ValueError(f"cap {a!r} is not a positive element")
        pairs.append(TruncationPair.of(G, G.sub(x, a), x))
        pairs.append(TruncationPair.of(G, x, G.add(x, a)))
    return pairs


def verify_uO(seq: SequenceFamily, x, truncations: Optional[Seq[TruncationPair]] = None,
              positives: Optional[Seq] = None, witnesses: Optional[dict] = None,
              mode: str = "O2", horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Unbounded order convergence: every clamped image sequence must
    order-converge to the clamped limit.

    On group carriers, positive caps are converted to their two clamp pairs;
    plain lattices supply truncation pairs directly.  A clamped sequence
    that is eventually constant is decided outright (order limits are
    unique); otherwise a per-pair witness is consulted in the given mode.
    The aggregate is the weakest per-pair verdict.
    """
    L = seq.carrier
    x = L.check_element(x)
    pairs = list(truncations or [])
    if positives:
        if not isinstance(L, GroupCarrier):
            raise CarrierMismatch("positive caps need a group carrier")
        pairs.extend(pairs_from_positives(L, x, positives))
    if not pairs:
        raise ValueError("unbounded order convergence needs at least one truncation")
    witnesses = witnesses or {}

    parts = []
    for p in pairs:
        t_seq = truncate_sequence(seq, p)
        t_x = truncate_f(L, p, x)
        td = t_seq.descriptor
        if isinstance(td, EventuallyConstant):
            value = L.normalize(td.value)
            if value == t_x:
                parts.append(Verdict.exact(detail=f"clamp {p.low!r},{p.high!r}: eventually the clamped limit"))
            else:
                parts.append(Verdict.falsified(witness=(p.low, p.high, td.from_index, value),
                                               detail="clamped tail settles away from the clamped limit"))
            continue
        if isinstance(td, Periodic) and len({L.normalize(v) for v in td.values}) > 1:
            parts.append(Verdict.falsified(witness=(p.low, p.high, td.from_index),
                                           detail="clamped tail oscillates, order limit impossible"))
            continue
        w = witnesses.get(p)
        if w is None:
            parts.append(Verdict.inconclusive(detail=f"no witness for clamp {p.low!r},{p.high!r}"))
        elif mode == "O1":
            parts.append(verify_O1(t_seq, t_x, w, horizon))
        else:
            parts.append(verify_O2(t_seq, t_x, w, horizon))
    return Verdict.weakest(parts)


# ---------------------------------------------------------------------------
# Metric convergence and Cauchy checks


def _tail_representatives(seq: SequenceFamily, start: int):
    """(values, complete) where values covers every term from start on when
    complete is True (eventually constant tails only)."""
    d = seq.descriptor
    if isinstance(d, EventuallyConstant):
        stop = max(d.from_index, start)
        values = [seq.value(k) for k in range(start, stop)]
        values.append(seq.carrier.normalize(d.value))
        return values, True
    return None, False


def metric_converges(seq: SequenceFamily, x, D: SemimetricFamily,
                     cert: MetricCertificate, eps_grid=DEFAULT_EPS_GRID,
                     horizon: int = DEFAULT_HORIZON) -> Verdict:
    """d(x_k, x) <= eps for k beyond the certificate, per member and eps."""
    L = seq.carrier
    x = L.check_element(x)
    parts = []
    for d in D.members:
        for eps in eps_grid:
            eps = rat(eps)
            start = cert.at(eps, d.name)
            values, complete = _tail_representatives(seq, start)
            if complete:
                bad = next((k for k, v in enumerate(values) if d(v, x) > eps), None)
                if bad is not None:
                    parts.append(Verdict.falsified(
                        witness=(d.name, str(eps), start + bad),
                        detail="distance exceeded eps beyond the certificate"))
                else:
                    parts.append(Verdict.exact(detail=f"{d.name}, eps={eps}: eventually constant tail"))
                continue
            hit = None
            for k in range(start, horizon + 1):
                if d(seq.value(k), x) > eps:
                    hit = k
                    break
            if hit is not None:
                parts.append(Verdict.falsified(witness=(d.name, str(eps), hit),
                                               detail="distance exceeded eps beyond the certificate"))
            else:
                parts.append(Verdict.at_horizon(horizon, detail=f"{d.name}, eps={eps}"))
    return Verdict.weakest(parts)


def _cauchy_probe_indices(start: int, horizon: int) -> list[int]:
    probes = set(range(start, min(start + 16, horizon) + 1))
    step = max(start, 1)
    while step <= horizon:
        probes.add(step)
        step *= 2
    probes.update(h for h in range(horizon - 4, horizon + 1) if h >= start)
    return sorted(probes)


def metric_cauchy(seq: SequenceFamily, D: SemimetricFamily,
                  cert: MetricCertificate, eps_grid=DEFAULT_EPS_GRID,
                  horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Pairwise d(x_j, x_k) <= eps for j, k beyond the certificate.

    Clamp-derived members with a decidable clamped tail are settled exactly:
    beyond the constancy index every pair collapses onto finitely many
    representative values.  Other members are probed on a budgeted pair set.
    """
    parts = []
    for d in D.members:
        clamped = None
        if d.origin and d.origin[0] == "clamp":
            clamped = truncate_sequence(seq, d.origin[1])
        for eps in eps_grid:
            eps = rat(eps)
            start = cert.at(eps, d.name)
            if clamped is not None:
                base: LatticeSemimetric = d.origin[2]
                values, complete = _tail_representatives(clamped, start)
                if complete:
                    bad = next(((i, j) for (i, u), (j, v)
                                in itertools.combinations(enumerate(values), 2)
                                if base(u, v) > eps), None)
                    if bad is not None:
                        parts.append(Verdict.falsified(
                            witness=(d.name, str(eps), start + bad[0], start + bad[1]),
                            detail="pair distance exceeded eps beyond the certificate"))
                    else:
                        parts.append(Verdict.exact(
                            detail=f"{d.name}, eps={eps}: clamped tail is eventually constant"))
                    continue
            probes = _cauchy_probe_indices(start, horizon)
            hit = None
            for a, b in itertools.combinations(probes, 2):
                if d(seq.value(a), seq.value(b)) > eps:
                    hit = (a, b)
                    break
            if hit is not None:
                parts.append(Verdict.falsified(witness=(d.name, str(eps)) + hit,
                                               detail="pair distance exceeded eps beyond the certificate"))
            else:
                parts.append(Verdict.at_horizon(horizon, detail=f"{d.name}, eps={eps}"))
    return Verdict.weakest(parts)


def exhaustivity_probe(seq: SequenceFamily, D: SemimetricFamily,
                       cert: Optional[MetricCertificate] = None,
                       eps_grid=DEFAULT_EPS_GRID,
                       horizon: int = DEFAULT_HORIZON) -> Verdict:
    """Cauchy probe of a monotone sequence: the operational form of
    exhaustivity.  Rejects non-monotone input."""
    L = seq.carrier
    d = seq.descriptor
    if isinstance(d, TailClosedForm):
        if not (d.series.nondecreasing_from(1)[0] or d.series.nonincreasing_from(1)[0]):
            raise ValueError("exhaustivity probe needs a monotone sequence")
    else:
        up = down = True
        prev = seq.value(1)
        for k in range(2, min(horizon, 256) + 1):
            cur = seq.value(k)
            up = up and L.leq(prev, cur)
            down = down and L.leq(cur, prev)
            prev = cur
        if not (up or down):
            raise ValueError("exhaustivity probe needs a monotone sequence")
    if cert is None:
        # For clamp-derived members the modulus is the clamped tail's
        # constancy index; everything else starts at 1.
        knees = {}
        for m in D.members:
            if m.origin and m.origin[0] == "clamp":
                td = truncate_sequence(seq, m.origin[1]).descriptor
                if isinstance(td, EventuallyConstant):
                    knees[m.name] = td.from_index
        cert = MetricCertificate(lambda _eps, name: knees.get(name, 1))
    return metric_cauchy(seq, D, cert, eps_grid, horizon)


# ---------------------------------------------------------------------------
# The two flagship counterexamples


def ustar_nonconvergence_on_line(r) -> Verdict:
    """Exact proof that x_k = k leaves every neighborhood of r in the clamp
    base: choose n = floor(|r| + 1) + 1; for every k >= n + 1 the pair
    (k, r) fails all three clauses of U_n."""
    r = rat(r)
    n = frac_floor(abs(r) + 1) + 1
    facts = (
        ("|r| <= n - 1", abs(r) <= n - 1),
        ("gap: (n + 1) - (n - 1) > 1/n", Fraction(2) > Fraction(1, n)),
        ("high clause dead: r < n", r < n),
        ("low clause dead: n + 1 > -n", n + 1 > -n),
    )
    for desc, ok in facts:
        if not ok:
            return Verdict.falsified(witness=(str(r), n, desc), detail="separation fact failed")
    for k in range(n + 1, n + 51):
        if real_entourage_contains(n, k, r):
            return Verdict.falsified(witness=(str(r), n, k),
                                     detail="spot check contradicted the clause analysis")
    return Verdict.exact(detail=f"n={n} separates the tail of (k) from {r}",
                         witness=("n", n))


@dataclass(frozen=True)
class SeparationEntry:
    k: int
    n: int
    truncated_gap: ExtValue
    bound: Fraction
    unclamped: ExtValue


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of the two-norm separation on eventually linear sequences."""

    cases: int
    truncated: Verdict
    unclamped: Verdict
    samples: tuple[SeparationEntry, ...]


def unbounded_separation_example(k_values=range(1, 51),
                                 n_values=range(1, 201)) -> SeparationReport:
    """With x = (1,2,3,...), e = (1,1,...), x_n = x + (1/n)e and cap a = k e:
    the clamp difference has norm at most k/n (so the clamped distances
    vanish along n), while |x_n - x| /\\ a keeps norm +inf for every (k, n).
    Both facts are checked exactly on the whole grid."""
    space = EvLinSpace()
    x = EvLinSeq.affine(0, 1)
    e = EvLinSeq.affine(1, 0)
    samples = []
    cases = 0
    for k in k_values:
        a = space.scale_rat(k, e)
        neg_a = space.negate(a)
        cap_pair = TruncationPair.of(space, neg_a, a)
        for n in n_values:
            xn = space.add(x, space.scale_rat(Fraction(1, n), e))
            gap = space.distance(truncate_f(space, cap_pair, xn),
                                 truncate_f(space, cap_pair, x))
            bound = Fraction(k, n)
            unclamped = space.norm(space.meet(space.abs_(space.sub(xn, x)), a))
            if gap > bound:
                return SeparationReport(cases, Verdict.falsified(
                    witness=(k, n, gap.to_json()), detail="clamp difference exceeded k/n"),
                    Verdict.inconclusive(), tuple(samples))
            if unclamped != EXT_INF:
                return SeparationReport(cases, Verdict.inconclusive(), Verdict.falsified(
                    witness=(k, n, unclamped.to_json()),
                    detail="capped difference unexpectedly had finite norm"), tuple(samples))
            cases += 1
            if (k, n) in ((1, 1), (3, 200), (50, 10_000)):
                samples.append(SeparationEntry(k, n, gap, bound, unclamped))
    truncated = Verdict.exact(detail=f"clamp difference <= k/n on {cases} grid points")
    unclamped = Verdict.falsified(
        witness=("norm", "inf"),
        detail=f"capped difference norm is +inf on all {cases} grid points")
    return SeparationReport(cases, truncated, unclamped, tuple(samples))
