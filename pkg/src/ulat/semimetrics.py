"""Lattice semimetrics, derived families, kernels, quotients, agreement.

A lattice semimetric is a symmetric, triangle-inequality semimetric that is
additionally contractive under both lattice operations:

    d(x \\/ z, y \\/ z) <= d(x, y)    and    d(x /\\ z, y /\\ z) <= d(x, y).

Uniformities are represented only through generating families of such
semimetrics; entourages {d < eps} are derived objects and never stored as
filters.  Values live in the nonnegative extended rationals so that exact
comparison is always available.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .carriers import Carrier, CarrierMismatch, FiniteLattice, load_finite_lattice
from .exact import EXT_INF, ExtValue, ext, rat
from .truncation import TruncationPair, truncate_f
from .verdicts import Verdict


@dataclass(frozen=True)
class LatticeSemimetric:
    """A named distance function on one carrier, valued in [0, +inf].

    origin records how the semimetric was built when that matters downstream;
    a clamp-derived member carries ("clamp", pair, base semimetric) so Cauchy
    checks can reuse the clamp's tail constancy symbolically.
    """

    name: str
    carrier: Carrier
    func: Callable[[object, object], object]
    origin: Optional[tuple] = None

    def __call__(self, x, y) -> ExtValue:
        return ext(self.func(x, y))


@dataclass(frozen=True)
class SemimetricFamily:
    """A nonempty finite family of semimetrics over a single carrier."""

    name: str
    carrier: Carrier
    members: tuple[LatticeSemimetric, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("a semimetric family must have at least one member")
        for d in self.members:
            if d.carrier is not self.carrier:
                raise CarrierMismatch(
                    f"member {d.name!r} lives on {d.carrier.name!r}, family on {self.carrier.name!r}"
                )

    @staticmethod
    def of(name: str, *members: LatticeSemimetric) -> "SemimetricFamily":
        if not members:
            raise ValueError("a semimetric family must have at least one member")
        return SemimetricFamily(name, members[0].carrier, tuple(members))

    def max_at(self, x, y) -> ExtValue:
        return max(d(x, y) for d in self.members)

    def vanishes_at(self, x, y) -> bool:
        return all(d(x, y) == 0 for d in self.members)


# ---------------------------------------------------------------------------
# Builders


def zero_semimetric(L: Carrier) -> LatticeSemimetric:
    return LatticeSemimetric("zero", L, lambda x, y: 0)


def discrete_semimetric(L: Carrier) -> LatticeSemimetric:
    return LatticeSemimetric("discrete", L, lambda x, y: 0 if x == y else 1)


def line_abs_semimetric(Q) -> LatticeSemimetric:
    """d(x, y) = |x - y| on the rational line."""
    return LatticeSemimetric("abs", Q, lambda x, y: abs(rat(x) - rat(y)))


def l1_semimetric(V) -> LatticeSemimetric:
    """Coordinate-sum distance on rational vectors."""

    def dist(x, y):
        return sum(abs(a - b) for a, b in zip(x, y))

    return LatticeSemimetric("l1", V, dist)


def c00_l1_semimetric(space) -> LatticeSemimetric:
    """Coordinate-sum distance on finitely supported sequences."""

    def dist(x, y):
        idxs = set(x.support) | set(y.support)
        return sum(abs(x.coordinate(i) - y.coordinate(i)) for i in idxs)

    return LatticeSemimetric("l1", space, dist)


def evlin_semimetric(space) -> LatticeSemimetric:
    """Coordinate-sum distance on eventually linear sequences; +inf when the
    difference has a nonzero eventual part."""
    return LatticeSemimetric("l1", space, space.distance)


def symmetric_difference_semimetric(algebra) -> LatticeSemimetric:
    """d(A, B) = size of the symmetric difference; +inf across the
    finite/cofinite divide."""

    def dist(a, b):
        if a.cofinite != b.cofinite:
            return EXT_INF
        return len(a.atoms ^ b.atoms)

    return LatticeSemimetric("symdiff", algebra, dist)


def pullback_semimetric(name: str, L: Carrier, mapping: Callable, base: LatticeSemimetric) -> LatticeSemimetric:
    """Pull a semimetric back along a lattice homomorphism into base.carrier.

    The pullback of a lattice semimetric along a homomorphism is again a
    lattice semimetric; callers are responsible for mapping actually being a
    homomorphism (validate_semimetric will catch the failure otherwise).
    """
    return LatticeSemimetric(name, L, lambda x, y: base(mapping(x), mapping(y)))


def table_semimetric(name: str, L: FiniteLattice, table: dict) -> LatticeSemimetric:
    """Semimetric given by an explicit symmetric table over a finite carrier.

    table maps unordered index pairs {i <= j} (as tuples (i, j)) to ExtValue.
    """

    def dist(x, y):
        i, j = L.index_of(x), L.index_of(y)
        if i == j:
            return ExtValue(0)
        return table[(min(i, j), max(i, j))]

    return LatticeSemimetric(name, L, dist)


# ---------------------------------------------------------------------------
# Validation


def _axiom_verdict(law: str, witness: tuple, exhaustive: bool, budget: int) -> Verdict:
    detail = f"{law} violated"
    return Verdict.falsified(witness=(law,) + witness, detail=detail,
                             horizon=None if exhaustive else budget)


def validate_semimetric(d: LatticeSemimetric, carrier: Optional[Carrier] = None,
                        budget: int = 200, rng=None) -> Verdict:
    """Check the lattice-semimetric axioms.

    Finite carriers are checked exhaustively over all pairs and triples and
    earn an exact verdict.  Symbolic carriers are checked on seeded random
    triples and earn a verified-at-horizon verdict with horizon = budget.
    A falsified verdict carries (law, elements...) as its witness.
    """
    L = carrier if carrier is not None else d.carrier
    if L is not d.carrier:
        raise CarrierMismatch(f"semimetric {d.name!r} is not defined on {L.name!r}")

    if L.is_finite:
        elems = list(L.elements())
        triples = itertools.product(elems, repeat=3)
        exhaustive = True
        count = None
    else:
        if rng is None:
            raise ValueError("symbolic carrier validation needs an rng")
        triples = ((L.sample(rng), L.sample(rng), L.sample(rng)) for _ in range(budget))
        exhaustive = False
        count = budget

    for x, y, z in triples:
        dxy = d(x, y)
        if d(x, x) != 0:
            return _axiom_verdict("zero-diagonal", (x,), exhaustive, budget)
        if dxy != d(y, x):
            return _axiom_verdict("symmetry", (x, y), exhaustive, budget)
        if d(x, z) > dxy + d(y, z):
            return _axiom_verdict("triangle", (x, y, z), exhaustive, budget)
        if d(L.join(x, z), L.join(y, z)) > dxy:
            return _axiom_verdict("join-contraction", (x, y, z), exhaustive, budget)
        if d(L.meet(x, z), L.meet(y, z)) > dxy:
            return _axiom_verdict("meet-contraction", (x, y, z), exhaustive, budget)
    if exhaustive:
        return Verdict.exact(detail=f"exhaustive over {len(elems)}^3 triples")
    return Verdict.at_horizon(count, detail=f"{count} random triples")


# ---------------------------------------------------------------------------
# Derived semimetrics and clamp families


def derived_semimetric(d: LatticeSemimetric, p: TruncationPair) -> LatticeSemimetric:
    """d_p(x, y) = d(clamp_p(x), clamp_p(y)) for a canonical pair p.

    Contraction applied twice gives d_p <= d pointwise, so every derived
    member is dominated by its source.
    """
    if not p.canonical:
        raise ValueError(f"derived semimetric needs a canonical pair, got {p!r}")
    L = d.carrier

    def dist(x, y):
        return d(truncate_f(L, p, x), truncate_f(L, p, y))

    return LatticeSemimetric(f"{d.name}[{p.low},{p.high}]", L, dist,
                             origin=("clamp", p, d))


def ustar_family(D: SemimetricFamily, J: Sequence[TruncationPair]) -> SemimetricFamily:
    """The family {d_p : d in D, p in J} generating the clamped uniformity.

    With J = all canonical pairs of a generating grid this is the unbounded
    modification of the uniformity generated by D.
    """
    pairs = list(J)
    if not pairs:
        raise ValueError("the index set J must be nonempty")
    members = tuple(derived_semimetric(d, p) for d in D.members for p in pairs)
    return SemimetricFamily(f"{D.name}*", D.carrier, members)


# ---------------------------------------------------------------------------
# Kernel, congruence, quotient


@dataclass(frozen=True)
class KernelRelation:
    """Zero-distance classes of a semimetric family on a finite carrier."""

    carrier: Carrier
    blocks: tuple[tuple, ...]

    def class_index(self, x) -> int:
        x = self.carrier.normalize(x)
        for i, block in enumerate(self.blocks):
            if x in block:
                return i
        raise CarrierMismatch(f"{x!r} is not in any kernel class of {self.carrier.name!r}")

    def class_of(self, x) -> tuple:
        return self.blocks[self.class_index(x)]

    def representative(self, x):
        return self.class_of(x)[0]

    @property
    def is_discrete(self) -> bool:
        return all(len(block) == 1 for block in self.blocks)

    def partition_sets(self) -> list[set]:
        return [set(block) for block in self.blocks]


def kernel_partition(L: Carrier, D: SemimetricFamily) -> KernelRelation:
    """Partition a finite carrier into zero-distance classes of D.

    Also verifies that the classes are congruence classes for both lattice
    operations: the class of x \\/ z and of x /\\ z may depend only on the
    classes of the arguments.  A violation means the input was not really a
    family of lattice semimetrics and raises ValueError with a witness.
    """
    if D.carrier is not L:
        raise CarrierMismatch(f"family {D.name!r} lives on {D.carrier.name!r}, not {L.name!r}")
    elems = L.elements()
    if elems is None:
        raise ValueError("kernel partition needs a finite carrier")

    blocks: list[list] = []
    for x in elems:
        for block in blocks:
            if D.vanishes_at(x, block[0]):
                block.append(x)
                break
        else:
            blocks.append([x])
    kernel = KernelRelation(L, tuple(tuple(b) for b in blocks))

    for block in kernel.blocks:
        x = block[0]
        for y in block[1:]:
            for z in elems:
                for op, tag in ((L.join, "join"), (L.meet, "meet")):
                    if kernel.class_index(op(x, z)) != kernel.class_index(op(y, z)):
                        raise ValueError(
                            f"kernel classes are not a {tag} congruence: "
                            f"witness x={x!r}, y={y!r}, z={z!r}"
                        )
    return kernel


@dataclass(frozen=True)
class QuotientLattice:
    """Finite quotient by a kernel, with the induced semimetric family."""

    carrier: FiniteLattice
    kernel: KernelRelation
    induced: SemimetricFamily
    hausdorff: bool

    def project(self, x):
        return self.kernel.representative(x)


def quotient(L: Carrier, kernel: KernelRelation, D: SemimetricFamily) -> QuotientLattice:
    """Collapse each zero-distance class to its first representative.

    The induced distances are well-defined by the triangle inequality:
    moving either argument inside its class costs zero.  Well-definedness is
    still verified element by element and a violation raises ValueError.
    The induced family separates distinct classes by construction, so the
    quotient kernel is discrete; this is checked and recorded.
    """
    if kernel.carrier is not L or D.carrier is not L:
        raise CarrierMismatch("kernel, family, and carrier must agree")
    reps = [block[0] for block in kernel.blocks]

    for d in D.members:
        for bi in kernel.blocks:
            for bj in kernel.blocks:
                base = d(bi[0], bj[0])
                for x in bi:
                    for y in bj:
                        if d(x, y) != base:
                            raise ValueError(
                                "representative-dependence detected: "
                                f"{d.name} at x={x!r}, y={y!r} differs from class value"
                            )

    def quotient_leq(rx, ry):
        return kernel.class_index(L.meet(rx, ry)) == kernel.class_index(rx)

    Q = FiniteLattice.from_leq(f"{L.name}/ker", reps, quotient_leq)

    def lift(d: LatticeSemimetric) -> LatticeSemimetric:
        return LatticeSemimetric(d.name, Q, lambda x, y, _d=d: _d(x, y))

    induced = SemimetricFamily(D.name, Q, tuple(lift(d) for d in D.members))
    induced_kernel_discrete = all(
        not induced.vanishes_at(rx, ry)
        for rx, ry in itertools.combinations(reps, 2)
    )
    return QuotientLattice(Q, kernel, induced, induced_kernel_discrete)


# ---------------------------------------------------------------------------
# Agreement of two families on an order interval


def order_interval(L: Carrier, p: TruncationPair) -> list:
    """All elements between p.low and p.high on a finite carrier."""
    elems = L.elements()
    if elems is None:
        raise ValueError("order intervals are only enumerable on finite carriers")
    if not p.canonical:
        raise ValueError("an order interval needs a canonical pair")
    return [x for x in elems if L.leq(p.low, x) and L.leq(x, p.high)]


def _dominates(Du: SemimetricFamily, Dv: SemimetricFamily, square) -> Optional[tuple]:
    """Exact eps-delta domination of Dv by Du over a finite pair set.

    Returns None if for every member of Dv and every positive attained value
    eps there is delta > 0 with max_Du < delta implying d_v < eps; otherwise
    returns a witness (d_v name, eps, x, y) where d_v(x, y) >= eps is forced
    at max_Du(x, y) = 0.
    """
    profiles = [(x, y, Du.max_at(x, y)) for x, y in square]
    for dv in Dv.members:
        values = sorted({dv(x, y) for x, y in square if dv(x, y) > 0})
        for eps in values:
            # delta must undercut max_Du on every pair where dv >= eps
            floor = min((m for x, y, m in profiles if dv(x, y) >= eps), default=None)
            if floor is None:
                continue
            if floor == 0:
                x, y = next((x, y) for x, y, m in profiles if dv(x, y) >= eps and m == 0)
                return (dv.name, eps, x, y)
    return None


def interval_agreement(Du: SemimetricFamily, Dv: SemimetricFamily, p: TruncationPair) -> Verdict:
    """Do Du and Dv induce the same uniformity on the interval [p.low, p.high]?

    Both directions of eps-delta domination are computed exactly over the
    finite set of values attained on the interval squared.  Exact on success;
    falsified with a witness pair on failure.  Finite carriers only.
    """
    if Du.carrier is not Dv.carrier:
        raise CarrierMismatch("both families must live on the same carrier")
    interval = order_interval(Du.carrier, p)
    square = [(x, y) for x in interval for y in interval]
    witness = _dominates(Du, Dv, square)
    if witness is not None:
        return Verdict.falsified(witness=witness,
                                 detail=f"{Du.name} does not dominate {Dv.name} on the interval")
    witness = _dominates(Dv, Du, square)
    if witness is not None:
        return Verdict.falsified(witness=witness,
                                 detail=f"{Dv.name} does not dominate {Du.name} on the interval")
    return Verdict.exact(detail=f"mutual domination over {len(interval)}^2 pairs")


# ---------------------------------------------------------------------------
# Hausdorff criterion for clamped uniformities indexed by a sublattice


def is_sublattice(L: Carrier, S: Sequence) -> bool:
    """Is S (as carrier elements) closed under meet and join?"""
    items = [L.check_element(s) for s in S]
    for a in items:
        for b in items:
            if L.meet(a, b) not in items or L.join(a, b) not in items:
                return False
    return True


@dataclass(frozen=True)
class RecoveryResult:
    """Details behind the Hausdorff criterion for a clamp family over S."""

    hausdorff: bool
    family_hausdorff: bool
    recovery_ok: bool
    kernel_hausdorff: bool
    failing_element: object = None

    def __bool__(self) -> bool:
        return self.hausdorff


def ph_criterion_detail(L: FiniteLattice, S: Sequence, D: SemimetricFamily) -> RecoveryResult:
    """Decide whether the clamp family over index pairs from S is Hausdorff.

    Two independent computations are run and must agree:

    criterion:  D itself is Hausdorff (joint kernel discrete)  AND  every x
                is recovered from S both ways, x = join of s /\\ x and
                x = meet of s \\/ x over s in S;
    kernel:     the joint kernel of {d_p : d in D, p canonical from S} is
                discrete.

    A disagreement raises RuntimeError (it would falsify the theory the
    implementation rests on); the shared boolean is returned with details.
    """
    elems = list(L.elements())
    items = [L.check_element(s) for s in S]
    if not items:
        raise ValueError("S must be nonempty")
    if not is_sublattice(L, items):
        raise ValueError("S is not a sublattice: not closed under meet and join")

    family_hausdorff = all(
        not D.vanishes_at(x, y) for x, y in itertools.combinations(elems, 2)
    )
    recovery_ok = True
    failing = None
    for x in elems:
        lower = L.join_all([L.meet(s, x) for s in items])
        upper = L.meet_all([L.join(s, x) for s in items])
        if lower != x or upper != x:
            recovery_ok = False
            failing = x
            break
    by_criterion = family_hausdorff and recovery_ok

    # discreteness of the joint clamp kernel, checked directly: on
    # nondistributive carriers the clamps are not homomorphisms, so the
    # kernel classes need not be congruence classes and kernel_partition
    # would reject them
    pairs = [TruncationPair.of(L, a, b) for a in items for b in items if L.leq(a, b)]
    clamped = ustar_family(D, pairs)
    kernel_hausdorff = all(
        not clamped.vanishes_at(x, y) for x, y in itertools.combinations(elems, 2)
    )

    if by_criterion != kernel_hausdorff:
        raise RuntimeError(
            f"criterion/kernel disagreement on {L.name!r} with S={items!r}: "
            f"criterion says {by_criterion}, kernel says {kernel_hausdorff}"
        )
    return RecoveryResult(by_criterion, family_hausdorff, recovery_ok,
                          kernel_hausdorff, failing)


def ph_criterion(L: FiniteLattice, S: Sequence, D: SemimetricFamily) -> bool:
    return ph_criterion_detail(L, S, D).hausdorff


# ---------------------------------------------------------------------------
# JSON distance tables


def load_distance_table(doc: dict, carriers: Optional[dict] = None,
                        name: str = "table") -> LatticeSemimetric:
    """Load {"carrier": ..., "distances": [[i, j, "p/q" | "inf"], ...]}.

    The carrier entry is either a name resolved through the carriers mapping
    or an inline lattice document.  Indices refer to the carrier's element
    order.  Symmetric duplicates must agree, diagonal entries must be zero,
    and every off-diagonal pair must be covered.
    """
    if not isinstance(doc, dict):
        raise ValueError("distance table must be a JSON object")
    spec_carrier = doc.get("carrier")
    if isinstance(spec_carrier, str):
        if carriers is None or spec_carrier not in carriers:
            raise ValueError(f"unknown carrier name {spec_carrier!r}")
        L = carriers[spec_carrier]
    elif isinstance(spec_carrier, dict):
        L = load_finite_lattice(spec_carrier)
    else:
        raise ValueError("carrier must be a name or an inline lattice document")
    if not isinstance(L, FiniteLattice):
        raise ValueError("distance tables are only supported over finite carriers")

    entries = doc.get("distances")
    if not isinstance(entries, list):
        raise ValueError("distances must be a list of [i, j, value] rows")
    n = len(L.elements())
    table: dict[tuple[int, int], ExtValue] = {}
    for row in entries:
        if not (isinstance(row, list) and len(row) == 3):
            raise ValueError(f"bad distance row {row!r}")
        i, j, raw = row
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < n and 0 <= j < n):
            raise ValueError(f"distance row {row!r} has out-of-range indices")
        if raw == "inf":
            value = EXT_INF
        else:
            value = ExtValue(Fraction(raw))
        if value < 0:
            raise ValueError(f"distance row {row!r} is negative")
        if i == j:
            if value != 0:
                raise ValueError(f"nonzero diagonal entry at index {i}")
            continue
        key = (min(i, j), max(i, j))
        if key in table and table[key] != value:
            raise ValueError(f"asymmetric entries for pair {key}: {table[key]!r} vs {value!r}")
        table[key] = value
    missing = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in table]
    if missing:
        raise ValueError(f"distance table is incomplete: missing pairs {missing[:5]}")
    return table_semimetric(name, L, table)
