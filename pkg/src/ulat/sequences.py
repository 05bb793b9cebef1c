"""Sequences with closed-form descriptors, order witnesses, certificates.

Sequences are 1-indexed total functions into a carrier.  A descriptor, when
present, is a machine-checkable closed form that licenses exact tail
reasoning: eventually constant, periodic, a rational closed form with an
alternating part, the unit-vector stream, or one of the finite/cofinite
chain shapes.  Everything downstream grades its verdicts by whether a
descriptor made a symbolic argument possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .carriers import Carrier
from .exact import RatAltSeq, rat
from .spaces import (AtomPrefixSets, C00Vec, CofiniteFilterChain, FinCofSet,
                     SingletonAtoms, fincof_bound_oracle, NO_BOUND)

# ---------------------------------------------------------------------------
# Descriptors


@dataclass(frozen=True)
class EventuallyConstant:
    """term(k) = value for every k >= from_index."""

    value: object
    from_index: int = 1


@dataclass(frozen=True)
class Periodic:
    """term(k) cycles through values for k >= from_index."""

    values: tuple
    from_index: int = 1

    def __post_init__(self):
        if not self.values:
            raise ValueError("a periodic descriptor needs at least one value")


@dataclass(frozen=True)
class TailClosedForm:
    """term(k) = series.eval(k) for every k >= 1 (rational-line carriers)."""

    series: RatAltSeq


@dataclass(frozen=True)
class UnitVectors:
    """term(k) = the k-th coordinate unit vector (finitely supported)."""


@dataclass(frozen=True)
class SequenceFamily:
    """A named 1-indexed sequence in a carrier, with optional closed form."""

    name: str
    carrier: Carrier
    term: Callable[[int], object]
    descriptor: object = None

    def value(self, k: int):
        if k < 1:
            raise ValueError("sequences are 1-indexed")
        return self.carrier.normalize(self.term(k))

    def descriptor_matches(self, indices) -> bool:
        """Spot-check that the descriptor reproduces term on these indices."""
        if self.descriptor is None:
            return True
        for k in indices:
            if self.value(k) != _descriptor_value(self, k):
                return False
        return True


def _descriptor_value(seq: SequenceFamily, k: int):
    d = seq.descriptor
    if isinstance(d, EventuallyConstant):
        return seq.carrier.normalize(d.value) if k >= d.from_index else seq.value(k)
    if isinstance(d, Periodic):
        if k < d.from_index:
            return seq.value(k)
        return seq.carrier.normalize(d.values[(k - d.from_index) % len(d.values)])
    if isinstance(d, TailClosedForm):
        return seq.carrier.normalize(d.series.eval(k))
    if isinstance(d, UnitVectors):
        return C00Vec.unit(k)
    if isinstance(d, SingletonAtoms):
        return FinCofSet.singleton(k)
    if isinstance(d, AtomPrefixSets):
        return FinCofSet.finite(range(1, k + 1))
    if isinstance(d, CofiniteFilterChain):
        return d.term(k)
    return seq.value(k)


# ---------------------------------------------------------------------------
# Factories


def constant_sequence(L: Carrier, value, name: Optional[str] = None) -> SequenceFamily:
    value = L.check_element(value)
    return SequenceFamily(name or f"const({value!r})", L, lambda k: value,
                          EventuallyConstant(value, 1))


def eventually_constant_sequence(L: Carrier, prefix, value, name: str) -> SequenceFamily:
    prefix = tuple(L.check_element(v) for v in prefix)
    value = L.check_element(value)

    def term(k):
        return prefix[k - 1] if k <= len(prefix) else value

    return SequenceFamily(name, L, term, EventuallyConstant(value, len(prefix) + 1))


def periodic_sequence(L: Carrier, values, name: str, from_index: int = 1,
                      prefix=()) -> SequenceFamily:
    values = tuple(L.check_element(v) for v in values)
    prefix = tuple(L.check_element(v) for v in prefix)
    if from_index != len(prefix) + 1:
        raise ValueError("periodic part must start right after the prefix")

    def term(k):
        if k <= len(prefix):
            return prefix[k - 1]
        return values[(k - from_index) % len(values)]

    return SequenceFamily(name, L, term, Periodic(values, from_index))


def series_sequence(Q: Carrier, series: RatAltSeq, name: str) -> SequenceFamily:
    return SequenceFamily(name, Q, series.eval, TailClosedForm(series))


def unit_vector_sequence(space: Carrier, name: str = "e_k") -> SequenceFamily:
    return SequenceFamily(name, space, lambda k: C00Vec.unit(k), UnitVectors())


def singleton_atom_sequence(algebra: Carrier, name: str = "A_k") -> SequenceFamily:
    return SequenceFamily(name, algebra, lambda k: FinCofSet.singleton(k),
                          SingletonAtoms())


def cofinite_chain_sequence(algebra: Carrier, name: str = "N_j",
                            within: Optional[FinCofSet] = None) -> SequenceFamily:
    chain = CofiniteFilterChain() if within is None else CofiniteFilterChain(within)
    return SequenceFamily(name, algebra, chain.term, chain)


def sequence_of(L: Carrier, term: Callable[[int], object], name: str,
                descriptor=None) -> SequenceFamily:
    return SequenceFamily(name, L, term, descriptor)


# ---------------------------------------------------------------------------
# Witnesses and certificates


@dataclass(frozen=True)
class O1Witness:
    """Sandwich data: lower nondecreasing to the limit, upper nonincreasing."""

    lower: SequenceFamily
    upper: SequenceFamily
    start_index: int = 1


@dataclass(frozen=True)
class O2Witness:
    """Interval data: x_k lies in [lower(j), upper(j)] once k >= k_of(j).

    offset is set when k_of is the affine map j -> j + offset; the exact
    symbolic containment arguments require it.
    """

    lower: SequenceFamily
    upper: SequenceFamily
    k_of: Callable[[int], int]
    offset: Optional[int] = None

    @staticmethod
    def affine(lower: SequenceFamily, upper: SequenceFamily, offset: int) -> "O2Witness":
        if offset < 0:
            raise ValueError("eventual-index offset must be nonnegative")
        return O2Witness(lower, upper, lambda j: j + offset, offset)


def o2_from_o1(w: O1Witness) -> "O2Witness":
    """Replay an O1 sandwich as interval data: the witness chains themselves
    bound the tail, with containment from index j onward."""
    shift = max(w.start_index - 1, 0)
    if shift == 0:
        return O2Witness.affine(w.lower, w.upper, 0)
    lower = SequenceFamily(w.lower.name, w.lower.carrier,
                           lambda j: w.lower.term(j + shift), _shift_descriptor(w.lower, shift))
    upper = SequenceFamily(w.upper.name, w.upper.carrier,
                           lambda j: w.upper.term(j + shift), _shift_descriptor(w.upper, shift))
    return O2Witness.affine(lower, upper, shift)


def _shift_descriptor(seq: SequenceFamily, shift: int):
    d = seq.descriptor
    if isinstance(d, EventuallyConstant):
        return EventuallyConstant(d.value, max(d.from_index - shift, 1))
    if isinstance(d, TailClosedForm):
        return TailClosedForm(d.series.shift(shift))
    return None


@dataclass(frozen=True)
class MetricCertificate:
    """modulus(eps, semimetric name) = index N with d(x_k, x) <= eps beyond N."""

    modulus: Callable[[Fraction, str], int]

    @staticmethod
    def uniform(fn: Callable[[Fraction], int]) -> "MetricCertificate":
        return MetricCertificate(lambda eps, _name: fn(eps))

    def at(self, eps, name: str = "") -> int:
        n = self.modulus(rat(eps), name)
        return max(int(n), 1)


# ---------------------------------------------------------------------------
# Bound oracle dispatch


@dataclass(frozen=True)
class BoundClaim:
    """Outcome of a sup/inf query over an enumerated tail {term(k): k >= k0}.

    value is the bound, NO_BOUND when provably absent from the carrier, or
    None when undecided; exact is True only for a symbolic or exhausted
    argument, False when the value is a fold of observed terms.
    """

    value: object
    exact: bool
    detail: str = ""

    @property
    def decided(self) -> bool:
        return self.value is not None


def chain_bound(seq: SequenceFamily, kind: str, k0: int = 1,
                horizon: int = 64) -> BoundClaim:
    """Best available sup/inf of the tail of a sequence, graded by method."""
    if kind not in ("sup", "inf"):
        raise ValueError("kind must be 'sup' or 'inf'")
    L = seq.carrier
    d = seq.descriptor
    fold = L.join_all if kind == "sup" else L.meet_all

    if isinstance(d, EventuallyConstant):
        values = [seq.value(k) for k in range(k0, max(d.from_index, k0))]
        values.append(L.normalize(d.value))
        return BoundClaim(fold(values), True, "eventually constant tail")
    if isinstance(d, Periodic):
        values = [seq.value(k) for k in range(k0, max(d.from_index, k0))]
        values.extend(L.normalize(v) for v in d.values)
        return BoundClaim(fold(values), True, "periodic tail")
    if isinstance(d, TailClosedForm):
        series = d.series
        limit = series.limit()
        if series.nondecreasing_from(k0)[0]:
            if kind == "inf":
                return BoundClaim(L.normalize(series.eval(k0)), True, "nondecreasing from k0")
            if isinstance(limit, Fraction):
                return BoundClaim(L.normalize(limit), True, "monotone limit")
            return BoundClaim(NO_BOUND, True, "increases without bound")
        if series.nonincreasing_from(k0)[0]:
            if kind == "sup":
                return BoundClaim(L.normalize(series.eval(k0)), True, "nonincreasing from k0")
            if isinstance(limit, Fraction):
                return BoundClaim(L.normalize(limit), True, "monotone limit")
            return BoundClaim(NO_BOUND, True, "decreases without bound")
        return BoundClaim(None, False, "tail is not monotone")
    if isinstance(d, UnitVectors):
        if kind == "inf":
            return BoundClaim(C00Vec.zero(), True, "zero bounds every unit vector")
        return BoundClaim(NO_BOUND, True, "no finitely supported upper bound")
    if isinstance(d, (SingletonAtoms, AtomPrefixSets, CofiniteFilterChain)):
        value = fincof_bound_oracle(d, kind, from_index=k0)
        if value is not None:
            return BoundClaim(value, True, "set-algebra oracle")
        return BoundClaim(None, False, "set-algebra oracle undecided")
    if L.is_finite:
        values = [seq.value(k) for k in range(k0, horizon + 1)]
        return BoundClaim(fold(values), False, f"fold of terms {k0}..{horizon}")
    return BoundClaim(None, False, "no descriptor and carrier not finite")


# ---------------------------------------------------------------------------
# JSON witness term grammar
#
# Scalar terms (rational line):
#   "k"            the index            "1/k"        its reciprocal
#   "alt"          (-1)^k               "p/q"        a rational constant
#   number         an integer constant
#   ["+", t, u]    ["-", t, u]   ["-", t]   ["*", t, u]   compose terms
# Carrier-specific builtins:
#   ["singleton-atoms"]        A_k = {k}           (finite/cofinite algebra)
#   ["atom-prefix"]            {1..k}              (finite/cofinite algebra)
#   ["drop-atom-prefix"]       complement of {1..k}
#   ["set", [atoms...]]        a constant finite set
#   ["coset", [atoms...]]      a constant cofinite set
#   ["unit-vectors"]           e_k                 (finitely supported seqs)
#   ["vec", t1, ..., tn]       a vector of scalar terms (rational vectors)


def parse_scalar_series(doc) -> RatAltSeq:
    """Parse a scalar term document into an exact closed-form sequence."""
    if isinstance(doc, bool):
        raise ValueError("booleans are not scalar terms")
    if isinstance(doc, int):
        return RatAltSeq.const(doc)
    if isinstance(doc, str):
        if doc == "k":
            return RatAltSeq.index()
        if doc == "1/k":
            return RatAltSeq.inv_index()
        if doc == "alt":
            return RatAltSeq.alt()
        return RatAltSeq.const(Fraction(doc))
    if isinstance(doc, list) and doc:
        op, *args = doc
        if op == "+" and len(args) == 2:
            return parse_scalar_series(args[0]) + parse_scalar_series(args[1])
        if op == "-" and len(args) == 2:
            return parse_scalar_series(args[0]) - parse_scalar_series(args[1])
        if op == "-" and len(args) == 1:
            return -parse_scalar_series(args[0])
        if op == "*" and len(args) == 2:
            return parse_scalar_series(args[0]) * parse_scalar_series(args[1])
    raise ValueError(f"unrecognized scalar term {doc!r}")


def parse_sequence_term(doc, carrier: Carrier, name: str = "term") -> SequenceFamily:
    """Parse a term document into a sequence on the given carrier."""
    if isinstance(doc, list) and doc:
        op, *args = doc
        if op == "singleton-atoms":
            return singleton_atom_sequence(carrier, name)
        if op == "atom-prefix":
            return SequenceFamily(name, carrier,
                                  lambda k: FinCofSet.finite(range(1, k + 1)),
                                  AtomPrefixSets())
        if op == "drop-atom-prefix":
            return cofinite_chain_sequence(carrier, name)
        if op == "set" and len(args) == 1:
            value = FinCofSet.finite(args[0])
            return constant_sequence(carrier, value, name)
        if op == "coset" and len(args) == 1:
            value = FinCofSet.cofinite_complement(args[0])
            return constant_sequence(carrier, value, name)
        if op == "unit-vectors":
            return unit_vector_sequence(carrier, name)
        if op == "vec":
            parts = [parse_scalar_series(a) for a in args]

            def term(k, _parts=tuple(parts)):
                return tuple(p.eval(k) for p in _parts)

            return SequenceFamily(name, carrier, term, None)
    series = parse_scalar_series(doc)
    return series_sequence(carrier, series, name)
