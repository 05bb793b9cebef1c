"""Exact computational laboratory for lattice uniformities and unbounded
convergence.

The package builds everything from rational arithmetic: carriers (finite
lattices, rational vectors, finitely supported and eventually linear
sequences, the finite/cofinite algebra), truncation maps, lattice
semimetrics with their clamp-derived families, entourage calculations on
the line, order and unbounded-order convergence checkers, and constructive
subnet extraction.  Every oracle answers with a graded verdict: exact,
verified-at-horizon, falsified (with a witness), or inconclusive.
"""

from .carriers import (
    Carrier,
    CheckResult,
    FiniteLattice,
    GroupCarrier,
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
from .catalog import CatalogEntry, finite_entries, standard_carriers
from .convergence import (
    DEFAULT_EPS_GRID,
    DEFAULT_HORIZON,
    decide_O1_eventual_constancy,
    exhaustivity_probe,
    metric_cauchy,
    metric_converges,
    pairs_from_positives,
    truncate_sequence,
    unbounded_separation_example,
    ustar_nonconvergence_on_line,
    verify_O1,
    verify_O2,
    verify_uO,
)
from .entourages import (
    RealEntourage,
    compose_case_analysis,
    compose_triple_violation,
    entourage_clause,
    real_entourage_compose_check,
    real_entourage_contains,
)
from .exact import EXT_INF, ExtValue, Poly, RatAltSeq, ext, rat
from .semimetrics import (
    KernelRelation,
    LatticeSemimetric,
    QuotientLattice,
    RecoveryResult,
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
from .sequences import (
    BoundClaim,
    EventuallyConstant,
    MetricCertificate,
    O1Witness,
    O2Witness,
    Periodic,
    SequenceFamily,
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
from .spaces import (
    C00Space,
    C00Vec,
    EvLinSeq,
    EvLinSpace,
    FinCofAlgebra,
    FinCofSet,
    QLine,
    QVec,
    fincof_bound_oracle,
)
from .subnet import SubnetContainmentError, SubnetEnumeration, SubnetStep, build_subnet
from .suites import (
    CheckRecord,
    SuiteConfig,
    SuiteResult,
    render_json,
    render_markdown,
    run_suite,
    run_suites,
    suite_names,
)
from .truncation import (
    TruncationPair,
    canonical_pairs,
    clamp_difference_bound,
    compose_truncations,
    decompose_abs_meet,
    is_truncation_hom,
    truncate_f,
    truncate_g,
)
from .verdicts import AT_HORIZON, EXACT, FALSIFIED, INCONCLUSIVE, Verdict

__version__ = "0.1.0"
