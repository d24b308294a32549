"""Finite enumerative procedures: up-sets, equation solving, Green's relations.

Everything above an element in the natural order, and every solution of a
one-sided equation ``a*x == b`` or ``x*a == b``, forms a finite set here;
these routines materialize them in the package-wide total order (see
:func:`cofiso.core.sort_key`).  Solution counts are always a power of two,
so the materializing entry points refuse above a configurable cutoff and
iterator forms are provided for the large cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import FinSet, Isometry, PartialIsometry, sort_key

DEFAULT_MAX_SOLUTIONS = 1 << 20


class TooManySolutionsError(Exception):
    """The materialized result would exceed the configured cutoff."""


@dataclass(frozen=True, slots=True)
class SolutionSet:
    """All solutions of a one-sided equation, sorted, without duplicates.

    ``unit_member`` is the unique solution with empty excluded set when one
    exists.  A nonempty solution set need not contain one; see
    :func:`scan_right_unit_claim`.
    """

    solutions: tuple[PartialIsometry, ...]
    unit_member: PartialIsometry | None

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self) -> Iterator[PartialIsometry]:
        return iter(self.solutions)


def _subsets(base: FinSet) -> Iterator[FinSet]:
    coords = base.elems
    for mask in range(1 << len(coords)):
        yield FinSet(c for i, c in enumerate(coords) if mask >> i & 1)


def _interval_sets(low: FinSet, high: FinSet) -> Iterator[FinSet]:
    """All sets H with low <= H <= high (low must be a subset of high)."""
    free = high.difference(low)
    for extra in _subsets(free):
        yield low | extra


def iter_upset(p: PartialIsometry) -> Iterator[PartialIsometry]:
    """Everything above ``p``: same isometry, any subset of the exclusions.

    Yields in subset-mask order over the sorted coordinates; use
    :func:`upset` for output in the total order.
    """
    for sub in _subsets(p.excl):
        yield PartialIsometry(p.gamma, sub)


def upset(
    p: PartialIsometry, max_size: int = DEFAULT_MAX_SOLUTIONS
) -> list[PartialIsometry]:
    """The finite up-set of ``p``, sorted; its size is ``2**len(p.excl)``."""
    if 2 ** len(p.excl) > max_size:
        raise TooManySolutionsError(
            f"up-set has 2**{len(p.excl)} elements, above cutoff {max_size}"
        )
    return sorted(iter_upset(p), key=sort_key)


def iter_solve_right(
    a: PartialIsometry, b: PartialIsometry
) -> Iterator[PartialIsometry]:
    """All x with ``a * x == b``, lazily.

    The isometry of any solution is forced: rho = a.gamma.inv() * b.gamma.
    Writing X, Y for the excluded sets of a, b, solutions exist iff X <= Y,
    and then the excluded set of x ranges over all H with
    ``(Y \\ X).image(a.gamma) <= H <= Y.image(a.gamma)``.
    """
    if not a.excl <= b.excl:
        return
    rho = a.gamma.inv() * b.gamma
    low = b.excl.difference(a.excl).image(a.gamma)
    high = b.excl.image(a.gamma)
    for h in _interval_sets(low, high):
        yield PartialIsometry(rho, h)


def iter_solve_left(
    a: PartialIsometry, b: PartialIsometry
) -> Iterator[PartialIsometry]:
    """All x with ``x * a == b``, lazily; mirror of :func:`iter_solve_right`."""
    rho = b.gamma * a.gamma.inv()
    pulled = a.excl.image(rho.inv())
    if not pulled <= b.excl:
        return
    low = b.excl.difference(pulled)
    for h in _interval_sets(low, b.excl):
        yield PartialIsometry(rho, h)


def _materialize(
    a: PartialIsometry, solutions: Iterator[PartialIsometry], max_solutions: int
) -> SolutionSet:
    if 2 ** len(a.excl) > max_solutions:
        raise TooManySolutionsError(
            f"solution set may have 2**{len(a.excl)} elements,"
            f" above cutoff {max_solutions}"
        )
    ordered = tuple(sorted(solutions, key=sort_key))
    units = [x for x in ordered if x.is_unit]
    return SolutionSet(ordered, units[0] if units else None)


def solve_right(
    a: PartialIsometry,
    b: PartialIsometry,
    max_solutions: int = DEFAULT_MAX_SOLUTIONS,
) -> SolutionSet:
    """Materialized ``{x : a * x == b}``; empty is a normal outcome."""
    return _materialize(a, iter_solve_right(a, b), max_solutions)


def solve_left(
    a: PartialIsometry,
    b: PartialIsometry,
    max_solutions: int = DEFAULT_MAX_SOLUTIONS,
) -> SolutionSet:
    """Materialized ``{x : x * a == b}``; empty is a normal outcome."""
    return _materialize(a, iter_solve_left(a, b), max_solutions)


@dataclass(frozen=True, slots=True)
class GreenRelations:
    l: bool
    r: bool
    h: bool
    d: bool


def gap_vector(s: FinSet) -> tuple[int, ...]:
    """Consecutive differences of the sorted set; empty for size <= 1."""
    e = s.elems
    return tuple(e[i + 1] - e[i] for i in range(len(e) - 1))


def congruent(s: FinSet, t: FinSet) -> bool:
    """Is some isometry mapping ``s`` onto ``t``?

    A finite set determines its translation class by its gap vector;
    a reflection reverses the gap vector.
    """
    if len(s) != len(t):
        return False
    gs, gt = gap_vector(s), gap_vector(t)
    return gs == gt or gs == tuple(reversed(gt))


def green(p: PartialIsometry, q: PartialIsometry) -> GreenRelations:
    """Green's relations from the canonical form.

    R is equality of domains, L equality of ranges, H both, and D congruence
    of the range exclusions under some isometry (equivalently, existence of
    an intermediate element R-related to one side and L-related to the
    other).
    """
    r = p.excl == q.excl
    l = p.range_excl == q.range_excl
    return GreenRelations(l=l, r=r, h=l and r, d=congruent(p.range_excl, q.range_excl))


def scan_right_unit_claim(coord_bound: int, gamma_samples: int = 500,
                          oracle_examples: int = 40, seed: int = 0) -> dict:
    """Exhaustively search for equations solvable without a unit solution.

    Sweeps every pair of excluded sets inside ``[-coord_bound, coord_bound]``
    with a representative isometry pair, materializes ``{x : a*x == b}``,
    verifies every solution by direct multiplication, and records whether a
    nonempty solution set lacks a unit member.  The solution structure does
    not depend on the chosen isometries (they only force the unit part of
    the solutions); rather than assuming that, the scan re-solves
    ``gamma_samples`` random isometry pairs and checks that count and
    unit-membership match the representative, and confirms
    ``oracle_examples`` of the flagged cases against the exhaustive
    pointwise search in :mod:`cofiso.oracle`.

    The report is an empirical answer, not an assertion baked into the
    library; the ``example`` entry holds raw elements for the caller to
    render.
    """
    import random

    from .oracle import oracle_solve, random_isometry

    universe = FinSet(range(-coord_bound, coord_bound + 1))
    all_sets = list(_subsets(universe))
    unit_count = 2 * (2 * coord_bound + 1)

    solvable = 0
    without_unit = 0
    bad_solution = 0
    example: dict | None = None
    flagged: list[tuple[PartialIsometry, PartialIsometry]] = []

    for xa in all_sets:
        a = PartialIsometry(Isometry.identity(), xa)
        for xb in all_sets:
            b = PartialIsometry(Isometry.identity(), xb)
            sol = solve_right(a, b)
            if not sol.solutions:
                continue
            solvable += 1
            for x in sol.solutions:
                if a * x != b:
                    bad_solution += 1
            if sol.unit_member is None:
                without_unit += 1
                if len(flagged) < max(oracle_examples, 1):
                    flagged.append((a, b))
                if example is None:
                    example = {
                        "a": a,
                        "b": b,
                        "solutions": list(sol.solutions),
                        "unit_member": None,
                    }

    rng = random.Random(seed)
    gamma_consistent = True
    for _ in range(gamma_samples):
        xa = rng.choice(all_sets)
        xb = rng.choice(all_sets)
        a0 = PartialIsometry(Isometry.identity(), xa)
        b0 = PartialIsometry(Isometry.identity(), xb)
        a1 = PartialIsometry(random_isometry(rng, coord_bound), xa)
        b1 = PartialIsometry(random_isometry(rng, coord_bound), xb)
        s0, s1 = solve_right(a0, b0), solve_right(a1, b1)
        if len(s0) != len(s1) or (s0.unit_member is None) != (s1.unit_member is None):
            gamma_consistent = False

    oracle_confirmed = 0
    for a, b in flagged[:oracle_examples]:
        brute = oracle_solve(a, b, "right")
        sol = solve_right(a, b)
        if tuple(brute) == sol.solutions and not any(x.is_unit for x in brute):
            oracle_confirmed += 1

    return {
        "coord_bound": coord_bound,
        "subset_pairs": len(all_sets) ** 2,
        "unit_pairs_per_subset_pair": unit_count ** 2,
        "solvable": solvable,
        "solvable_without_unit": without_unit,
        "unit_claim_holds": without_unit == 0,
        "invalid_solutions": bad_solution,
        "gamma_samples": gamma_samples,
        "gamma_samples_consistent": gamma_consistent,
        "oracle_confirmed_examples": oracle_confirmed,
        "example": example,
    }
