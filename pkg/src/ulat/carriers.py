"""Lattice carriers: the base protocol, finite lattices, and ell-group mixins.

Design rules shared by every carrier:

* element equality is structural and exact (frozen values, Fractions);
* ``leq`` is derived from ``meet`` rather than stored, so there is one
  source of truth for the order;
* operations reject elements that do not belong to the carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional, Sequence

FINITE = "finite"
SYMBOLIC = "symbolic"


class CarrierMismatch(TypeError):
    """An element was passed to a carrier it does not belong to."""


class NotALattice(ValueError):
    """A finite order failed to be a lattice; carries a diagnostic pair."""

    def __init__(self, message: str, pair=None, missing: str | None = None):
        super().__init__(message)
        self.pair = pair
        self.missing = missing


class Carrier:
    """Abstract lattice carrier."""

    name: str
    kind: str
    distributive: bool
    bounded: bool
    bottom: object
    top: object

    def __init__(self, name: str, kind: str, distributive: bool, bounded: bool,
                 bottom: object = None, top: object = None):
        self.name = name
        self.kind = kind
        self.distributive = distributive
        self.bounded = bounded
        self.bottom = bottom
        self.top = top

    # -- element handling

    def normalize(self, x):
        return x

    def contains(self, x) -> bool:
        raise NotImplementedError

    def check_element(self, x):
        y = self.normalize(x)
        if not self.contains(y):
            raise CarrierMismatch(f"{x!r} is not an element of carrier {self.name!r}")
        return y

    def elements(self) -> Optional[Sequence]:
        """Enumerated universe for finite carriers, None for symbolic ones."""
        return None

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def sample(self, rng):
        """Draw a pseudo-random element (symbolic carriers override)."""
        elems = self.elements()
        if elems is None:
            raise NotImplementedError(f"carrier {self.name!r} has no sampler")
        return elems[rng.randrange(len(elems))]

    # -- lattice structure

    def _meet(self, x, y):
        raise NotImplementedError

    def _join(self, x, y):
        raise NotImplementedError

    def meet(self, x, y):
        return self._meet(self.check_element(x), self.check_element(y))

    def join(self, x, y):
        return self._join(self.check_element(x), self.check_element(y))

    def leq(self, x, y) -> bool:
        x = self.check_element(x)
        y = self.check_element(y)
        return self._meet(x, y) == x

    def join_all(self, xs):
        xs = list(xs)
        if not xs:
            raise ValueError("join of an empty family")
        acc = self.check_element(xs[0])
        for x in xs[1:]:
            acc = self._join(acc, self.check_element(x))
        return acc

    def meet_all(self, xs):
        xs = list(xs)
        if not xs:
            raise ValueError("meet of an empty family")
        acc = self.check_element(xs[0])
        for x in xs[1:]:
            acc = self._meet(acc, self.check_element(x))
        return acc

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name!r}>"


class GroupCarrier(Carrier):
    """Lattice-ordered abelian group: adds translation structure.

    ``abs_``, ``pos_part`` and ``neg_part`` are derived from the lattice
    operations, so x = pos_part(x) - neg_part(x) and
    abs_(x) = pos_part(x) + neg_part(x) hold by the usual identities.
    """

    zero: object

    def add(self, x, y):
        raise NotImplementedError

    def negate(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.negate(y))

    def abs_(self, x):
        return self.join(x, self.negate(x))

    def pos_part(self, x):
        return self.join(x, self.zero)

    def neg_part(self, x):
        return self.join(self.negate(x), self.zero)

    def is_positive(self, x) -> bool:
        """x >= 0 in the group order."""
        return self.leq(self.zero, x)

    def scale(self, n: int, x):
        """Integer multiple n*x (n may be negative)."""
        if n == 0:
            return self.zero
        acc = x if n > 0 else self.negate(x)
        for _ in range(abs(n) - 1):
            acc = self.add(acc, x if n > 0 else self.negate(x))
        return acc


# ---------------------------------------------------------------------------
# Finite lattices


class FiniteLattice(Carrier):
    """Finite lattice backed by meet/join tables."""

    def __init__(self, name: str, elements: Sequence, meet_table: dict, join_table: dict,
                 distributive: bool, bottom, top):
        super().__init__(name, FINITE, distributive, True, bottom, top)
        self._elements = list(elements)
        self._index = {e: i for i, e in enumerate(self._elements)}
        self._meet_table = meet_table
        self._join_table = join_table

    # -- construction

    @staticmethod
    def from_leq(name: str, elements: Sequence, leq: Callable[[object, object], bool]) -> "FiniteLattice":
        elems = list(elements)
        if len(set(elems)) != len(elems):
            raise NotALattice("duplicate elements")
        for x in elems:
            if not leq(x, x):
                raise NotALattice(f"order not reflexive at {x!r}")
        for x in elems:
            for y in elems:
                if x != y and leq(x, y) and leq(y, x):
                    raise NotALattice(f"order not antisymmetric on {(x, y)!r}", pair=(x, y))
        meet_table: dict = {}
        join_table: dict = {}
        for x in elems:
            for y in elems:
                lows = [z for z in elems if leq(z, x) and leq(z, y)]
                glb = [m for m in lows if all(leq(z, m) for z in lows)]
                if len(glb) != 1:
                    raise NotALattice(
                        f"pair {(x, y)!r} has no greatest lower bound", pair=(x, y), missing="meet")
                highs = [z for z in elems if leq(x, z) and leq(y, z)]
                lub = [m for m in highs if all(leq(m, z) for z in highs)]
                if len(lub) != 1:
                    raise NotALattice(
                        f"pair {(x, y)!r} has no least upper bound", pair=(x, y), missing="join")
                meet_table[(x, y)] = glb[0]
                join_table[(x, y)] = lub[0]
        bottom = elems[0]
        top = elems[0]
        for x in elems:
            bottom = meet_table[(bottom, x)]
            top = join_table[(top, x)]
        lat = FiniteLattice(name, elems, meet_table, join_table, False, bottom, top)
        lat.distributive = check_distributive(lat).holds
        return lat

    @staticmethod
    def from_covers(name: str, elements: Sequence[str], covers: Iterable[Sequence]) -> "FiniteLattice":
        elems = list(elements)
        index = {}
        for e in elems:
            if e in index:
                raise NotALattice(f"duplicate element name {e!r}")
            index[e] = True
        succ: dict = {e: set() for e in elems}
        for cover in covers:
            if len(cover) != 2:
                raise NotALattice(f"cover {cover!r} is not a pair")
            lo, hi = cover
            if lo not in index or hi not in index:
                raise NotALattice(f"cover {cover!r} mentions an unknown element")
            if lo == hi:
                raise NotALattice(f"cover {cover!r} is reflexive")
            succ[lo].add(hi)
        # reflexive-transitive closure with cycle rejection
        reach: dict = {}
        for e in elems:
            seen = {e}
            stack = list(succ[e])
            while stack:
                v = stack.pop()
                if v == e:
                    raise NotALattice(f"cover cycle through {e!r}", pair=(e, e))
                if v in seen:
                    continue
                seen.add(v)
                stack.extend(succ[v])
            reach[e] = seen
        for x in elems:
            for y in elems:
                if x != y and y in reach[x] and x in reach[y]:
                    raise NotALattice(f"cover cycle on {(x, y)!r}", pair=(x, y))
        return FiniteLattice.from_leq(name, elems, lambda a, b: b in reach[a])

    # -- protocol

    def contains(self, x) -> bool:
        return x in self._index

    def elements(self) -> Sequence:
        return list(self._elements)

    def _meet(self, x, y):
        return self._meet_table[(x, y)]

    def _join(self, x, y):
        return self._join_table[(x, y)]

    def index_of(self, x) -> int:
        return self._index[self.check_element(x)]


# ---------------------------------------------------------------------------
# JSON loading


def load_finite_lattice(doc: dict, name: str = "lattice") -> FiniteLattice:
    """Build a finite lattice from {"elements": [...], "covers": [[lo, hi], ...]}.

    Rejects non-lattices with a diagnostic pair (NotALattice).
    """
    if not isinstance(doc, dict):
        raise NotALattice("document must be a JSON object")
    elements = doc.get("elements")
    covers = doc.get("covers")
    if not isinstance(elements, list) or not elements:
        raise NotALattice("'elements' must be a nonempty list")
    if not all(isinstance(e, str) for e in elements):
        raise NotALattice("'elements' must be strings")
    if not isinstance(covers, list):
        raise NotALattice("'covers' must be a list of [lo, hi] pairs")
    return FiniteLattice.from_covers(doc.get("name", name), elements, covers)


# ---------------------------------------------------------------------------
# Builders for the standard finite carriers


def powerset_lattice(n: int) -> FiniteLattice:
    """Boolean lattice of subsets of {1, ..., n} (n <= 4 keeps it desk scale)."""
    if not 1 <= n <= 4:
        raise ValueError("powerset carrier supports 1 <= n <= 4")
    base = list(range(1, n + 1))
    elems = []
    for r in range(n + 1):
        for combo in combinations(base, r):
            elems.append(frozenset(combo))
    return FiniteLattice.from_leq(f"powerset{n}", elems, lambda a, b: a <= b)


def divisor_lattice(n: int = 60) -> FiniteLattice:
    """Divisors of n ordered by divisibility (gcd/lcm lattice)."""
    divs = [d for d in range(1, n + 1) if n % d == 0]
    return FiniteLattice.from_leq(f"divisor{n}", divs, lambda a, b: b % a == 0)


def chain_lattice(n: int) -> FiniteLattice:
    """Total order 0 < 1 < ... < n-1."""
    if n < 1:
        raise ValueError("chain needs at least one element")
    return FiniteLattice.from_leq(f"chain{n}", list(range(n)), lambda a, b: a <= b)


def pentagon_lattice() -> FiniteLattice:
    """The five-element nondistributive lattice with a three-element chain."""
    elems = ["0", "a", "c", "b", "1"]
    order = {
        ("0", "a"), ("0", "b"), ("0", "c"), ("0", "1"),
        ("a", "c"), ("a", "1"), ("c", "1"), ("b", "1"),
    }
    return FiniteLattice.from_leq("n5", elems, lambda x, y: x == y or (x, y) in order)


def diamond_lattice() -> FiniteLattice:
    """The five-element nondistributive lattice with three incomparable atoms."""
    elems = ["0", "a", "b", "c", "1"]
    order = {("0", e) for e in ("a", "b", "c", "1")} | {(e, "1") for e in ("a", "b", "c")}
    return FiniteLattice.from_leq("m3", elems, lambda x, y: x == y or (x, y) in order)


# ---------------------------------------------------------------------------
# Axiom checks


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    witness: object = None
    law: str = ""

    def __bool__(self) -> bool:
        return self.holds


def check_distributive(L: Carrier) -> CheckResult:
    """Exhaustive distributivity check; finite carriers only."""
    elems = L.elements()
    if elems is None:
        raise ValueError("distributivity check needs a finite carrier")
    for x in elems:
        for y in elems:
            for z in elems:
                lhs = L.meet(x, L.join(y, z))
                rhs = L.join(L.meet(x, y), L.meet(x, z))
                if lhs != rhs:
                    return CheckResult(False, witness=(x, y, z), law="meet-over-join")
    return CheckResult(True)


def check_lattice_axioms(L: Carrier, xs: Sequence) -> CheckResult:
    """Commutativity, associativity, idempotence, absorption and the
    meet/leq coherence, over all pairs/triples drawn from xs."""
    xs = [L.check_element(x) for x in xs]
    for x in xs:
        if L.meet(x, x) != x:
            return CheckResult(False, (x,), "meet-idempotent")
        if L.join(x, x) != x:
            return CheckResult(False, (x,), "join-idempotent")
    for x in xs:
        for y in xs:
            if L.meet(x, y) != L.meet(y, x):
                return CheckResult(False, (x, y), "meet-commutative")
            if L.join(x, y) != L.join(y, x):
                return CheckResult(False, (x, y), "join-commutative")
            if L.meet(x, L.join(x, y)) != x:
                return CheckResult(False, (x, y), "absorption-meet-join")
            if L.join(x, L.meet(x, y)) != x:
                return CheckResult(False, (x, y), "absorption-join-meet")
            if L.leq(x, y) != (L.join(x, y) == y):
                return CheckResult(False, (x, y), "leq-meet-join-coherence")
    for x in xs:
        for y in xs:
            for z in xs:
                if L.meet(L.meet(x, y), z) != L.meet(x, L.meet(y, z)):
                    return CheckResult(False, (x, y, z), "meet-associative")
                if L.join(L.join(x, y), z) != L.join(x, L.join(y, z)):
                    return CheckResult(False, (x, y, z), "join-associative")
    return CheckResult(True)


def check_group_axioms(G: GroupCarrier, xs: Sequence) -> CheckResult:
    """Translation invariance of the order plus the standard decompositions
    x = pos - neg, |x| = pos + neg, pos /\\ neg = 0, over elements of xs."""
    xs = [G.check_element(x) for x in xs]
    for x in xs:
        pos = G.pos_part(x)
        neg = G.neg_part(x)
        if G.sub(pos, neg) != x:
            return CheckResult(False, (x,), "pos-minus-neg")
        if G.add(pos, neg) != G.abs_(x):
            return CheckResult(False, (x,), "abs-as-pos-plus-neg")
        if G.meet(pos, neg) != G.zero:
            return CheckResult(False, (x,), "pos-meet-neg-zero")
    for x in xs:
        for y in xs:
            for z in xs:
                if G.leq(x, y) != G.leq(G.add(x, z), G.add(y, z)):
                    return CheckResult(False, (x, y, z), "translation-invariance")
                if G.add(G.meet(x, y), z) != G.meet(G.add(x, z), G.add(y, z)):
                    return CheckResult(False, (x, y, z), "translation-meet")
                if G.add(G.join(x, y), z) != G.join(G.add(x, z), G.add(y, z)):
                    return CheckResult(False, (x, y, z), "translation-join")
    return CheckResult(True)


def sublattices(L: FiniteLattice, max_size: Optional[int] = None):
    """Yield every nonempty sublattice (as a tuple) of a finite lattice."""
    elems = L.elements()
    n = len(elems)
    limit = n if max_size is None else min(n, max_size)
    for r in range(1, limit + 1):
        for combo in combinations(elems, r):
            s = set(combo)
            closed = True
            for x in combo:
                for y in combo:
                    if L.meet(x, y) not in s or L.join(x, y) not in s:
                        closed = False
                        break
                if not closed:
                    break
            if closed:
                yield combo
