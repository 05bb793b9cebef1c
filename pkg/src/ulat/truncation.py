"""Truncation operators and their algebra.

For a pair p = (a, b) the two clamps are

    clamp_low_high(p, x)  = (x /\\ b) \\/ a      (meet with b, then join a)
    clamp_high_low(p, x)  = (x \\/ a) /\\ b      (join a, then meet b)

A pair is canonical when a <= b; canonical pairs are the index set for
derived semimetrics.  Non-canonical pairs are deliberately allowed as
values because pair composition can produce them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .carriers import Carrier, CheckResult, GroupCarrier


@dataclass(frozen=True)
class TruncationPair:
    """An ordered pair of carrier elements with a canonicity flag.

    Canonicity (a <= b) is recorded, never required: composing two canonical
    pairs may leave the canonical set, and the composite is still a valid
    description of the composed operator.
    """

    low: object
    high: object
    canonical: bool

    @staticmethod
    def of(L: Carrier, low, high) -> "TruncationPair":
        low = L.check_element(low)
        high = L.check_element(high)
        return TruncationPair(low, high, L.leq(low, high))


def canonical_pairs(L: Carrier):
    """All canonical pairs of a finite carrier, in element order."""
    elems = L.elements()
    if elems is None:
        raise ValueError("canonical pair enumeration needs a finite carrier")
    return [TruncationPair.of(L, a, b) for a in elems for b in elems if L.leq(a, b)]


def truncate_f(L: Carrier, p: TruncationPair, x):
    """(x /\\ high) \\/ low."""
    return L.join(L.meet(x, p.high), p.low)


def truncate_g(L: Carrier, p: TruncationPair, x):
    """(x \\/ low) /\\ high."""
    return L.meet(L.join(x, p.low), p.high)


def compose_truncations(L: Carrier, outer: TruncationPair, inner: TruncationPair) -> TruncationPair:
    """The pair describing outer-after-inner on a distributive carrier.

    With outer = (a, b) and inner = (c, d) the composite clamp is the clamp
    of the pair (a \\/ (b /\\ c), b /\\ d); distributivity is what makes the
    pointwise identity hold, so nondistributive carriers are rejected.
    """
    if not L.distributive:
        raise ValueError(f"carrier {L.name!r} is not distributive; composition law unavailable")
    a, b = outer.low, outer.high
    c, d = inner.low, inner.high
    return TruncationPair.of(L, L.join(a, L.meet(b, c)), L.meet(b, d))


def is_truncation_hom(L: Carrier, p: TruncationPair) -> CheckResult:
    """Exhaustively decide whether the clamp of p preserves meets and joins.

    Finite carriers only; the witness is (x, y, op) on failure.
    """
    elems = L.elements()
    if elems is None:
        raise ValueError("homomorphism check needs a finite carrier")
    for x in elems:
        for y in elems:
            fx = truncate_f(L, p, x)
            fy = truncate_f(L, p, y)
            if truncate_f(L, p, L.meet(x, y)) != L.meet(fx, fy):
                return CheckResult(False, witness=(x, y, "meet"), law="clamp-meet")
            if truncate_f(L, p, L.join(x, y)) != L.join(fx, fy):
                return CheckResult(False, witness=(x, y, "join"), law="clamp-join")
    return CheckResult(True)


# ---------------------------------------------------------------------------
# The ell-group decomposition behind unbounded convergence


@dataclass(frozen=True)
class AbsMeetDecomposition:
    """|x - y| /\\ a split into the two clamp differences around y."""

    lhs: object
    term_low: object
    term_high: object
    holds: bool


def decompose_abs_meet(G: GroupCarrier, x, y, a) -> AbsMeetDecomposition:
    """Split |x - y| /\\ a into clamp differences: with p- = (y - a, y) and
    p+ = (y, y + a),

        |x - y| /\\ a = |f_{p-}(x) - f_{p-}(y)| + |f_{p+}(x) - f_{p+}(y)|

    holds exactly on every abelian ell-group for a >= 0.
    """
    x = G.check_element(x)
    y = G.check_element(y)
    a = G.check_element(a)
    if G.neg_part(a) != G.zero:
        raise ValueError("the cap must be a positive element")
    lhs = G.meet(G.abs_(G.sub(x, y)), a)
    p_low = TruncationPair.of(G, G.sub(y, a), y)
    p_high = TruncationPair.of(G, y, G.add(y, a))
    term_low = G.abs_(G.sub(truncate_f(G, p_low, x), truncate_f(G, p_low, y)))
    term_high = G.abs_(G.sub(truncate_f(G, p_high, x), truncate_f(G, p_high, y)))
    holds = lhs == G.add(term_low, term_high)
    return AbsMeetDecomposition(lhs, term_low, term_high, holds)


def clamp_difference_bound(G: GroupCarrier, s, x, y, a) -> bool:
    """For any base point s and cap a >= 0, the clamp over (s, s + a)
    contracts differences below |x - y| /\\ a."""
    s = G.check_element(s)
    a = G.check_element(a)
    if G.neg_part(a) != G.zero:
        raise ValueError("the cap must be a positive element")
    p = TruncationPair.of(G, s, G.add(s, a))
    diff = G.abs_(G.sub(truncate_f(G, p, x), truncate_f(G, p, y)))
    cap = G.meet(G.abs_(G.sub(x, y)), a)
    return G.leq(diff, cap)
