"""A guided tour of the package's negative results.

Each stop prints the concrete witness behind one of the separating examples:
where clamps stop being homomorphisms, why the entourage index must be
halved, how the identity walk is Cauchy for clamps but for nothing else,
and where interval convergence parts ways with monotone sandwiches.

    python3 scripts/counterexample_tour.py
"""

from fractions import Fraction

from ulat.carriers import diamond_lattice, pentagon_lattice
from ulat.convergence import (
    decide_O1_eventual_constancy,
    exhaustivity_probe,
    unbounded_separation_example,
    ustar_nonconvergence_on_line,
    verify_O2,
)
from ulat.entourages import compose_triple_violation, entourage_clause
from ulat.exact import RatAltSeq
from ulat.semimetrics import SemimetricFamily, line_abs_semimetric, ustar_family
from ulat.sequences import (
    O2Witness,
    cofinite_chain_sequence,
    constant_sequence,
    series_sequence,
    singleton_atom_sequence,
)
from ulat.spaces import FinCofAlgebra, FinCofSet, QLine
from ulat.truncation import TruncationPair, canonical_pairs, is_truncation_hom


def stop(title: str) -> None:
    print()
    print(f"== {title}")


def tour_clamps_that_break() -> None:
    stop("clamps stop being homomorphisms off distributive ground")
    for L in (pentagon_lattice(), diamond_lattice()):
        broken = None
        for p in canonical_pairs(L):
            res = is_truncation_hom(L, p)
            if not res:
                broken = (p, res)
                break
        p, res = broken
        x, y, op = res.witness
        print(f"  {L.name}: clamp ({p.low!r}, {p.high!r}) maps the {op} of "
              f"{x!r} and {y!r} away from the {op} of the images")


def tour_unhalved_composition() -> None:
    stop("composing a neighborhood with itself needs the halved index")
    x, y, z = Fraction(0), Fraction(1, 2), Fraction(1)
    assert compose_triple_violation(2, x, y, z)
    print(f"  ({x}, {y}) sits in U_2 via the {entourage_clause(2, x, y)} clause,")
    print(f"  ({y}, {z}) likewise, yet ({x}, {z}) is in no clause of U_2;")
    print("  U_4 o U_4 <= U_2 is what the nine-case analysis proves instead")


def tour_walk() -> None:
    stop("the identity walk x_k = k")
    Q = QLine()
    walk = series_sequence(Q, RatAltSeq.index(), "walk")
    abs_family = SemimetricFamily.of("abs", line_abs_semimetric(Q))
    star = ustar_family(abs_family,
                        [TruncationPair.of(Q, -n, n) for n in range(1, 9)])
    plain = exhaustivity_probe(walk, abs_family, horizon=512)
    clamp = exhaustivity_probe(walk, star, horizon=512)
    print(f"  plain distance: {plain.status} at witness {plain.witness}")
    print(f"  clamp family:   {clamp.status} ({clamp.detail})")
    for r in (Fraction(0), Fraction(100), Fraction(-7, 2)):
        v = ustar_nonconvergence_on_line(r)
        print(f"  target {str(r):>6}: {v.detail}")


def tour_two_norms() -> None:
    stop("clamped distances vanish, the capped norm never does")
    report = unbounded_separation_example(k_values=range(1, 4),
                                          n_values=range(1, 201))
    for s in report.samples:
        print(f"  cap {s.k}e, step 1/{s.n}: clamp gap {s.truncated_gap.to_json()} "
              f"(bound {s.bound}), capped norm {s.unclamped.to_json()}")
    print(f"  truncated: {report.truncated.status}; "
          f"unclamped: {report.unclamped.status} {report.unclamped.witness}")


def tour_interval_vs_sandwich() -> None:
    stop("interval convergence without any monotone sandwich")
    A = FinCofAlgebra()
    atoms = singleton_atom_sequence(A)
    empty = constant_sequence(A, FinCofSet.empty(), "empty")
    chain = cofinite_chain_sequence(A)
    via_intervals = verify_O2(atoms, FinCofSet.empty(),
                              O2Witness.affine(empty, chain, 1))
    via_constancy = decide_O1_eventual_constancy(atoms, FinCofSet.empty())
    print(f"  interval data: {via_intervals.status} ({via_intervals.detail})")
    print(f"  sandwich route: {via_constancy.status} ({via_constancy.detail})")


def main() -> None:
    tour_clamps_that_break()
    tour_unhalved_composition()
    tour_walk()
    tour_two_norms()
    tour_interval_vs_sandwich()
    print()


if __name__ == "__main__":
    main()
