"""Pointwise window semantics: the independent referee for every closed form.

A :class:`WindowMap` is what you get by evaluating a partial isometry point
by point on the finite window ``[-n, n]``: an explicit table of the defined
points and their images (images may fall outside the window).  Products,
inverses, order and equation solving can all be recomputed this way without
touching the canonical set algebra, which makes the window path a genuinely
independent second implementation: the two paths share only membership tests
and unit-group (isometry) arithmetic, never the closed-form formulas for
excluded sets.

Windows are auto-sized so that agreement on the window implies equality of
elements: the window covers every excluded coordinate and its images with a
margin of two, which leaves at least two shared in-domain points to pin down
the underlying isometry and exposes every excluded point.

This module is a referee, not a fast path; everything is O(window).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .core import (
    INT_MAX,
    INT_MIN,
    CoordinateOverflowError,
    FinSet,
    Isometry,
    PartialIsometry,
    sort_key,
)

DEFAULT_MARGIN = 2


@dataclass(frozen=True, slots=True)
class WindowMap:
    """Explicit finite partial injection: points of ``[-n, n]`` and images.

    Derived from a :class:`PartialIsometry`, never authoritative.  Pairs are
    stored sorted by source point.  Injectivity is checked at construction;
    the quadratic distance-preservation check lives in
    :meth:`is_distance_preserving` and runs in the test suite.
    """

    window_n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.window_n < 1:
            raise ValueError("window size must be >= 1")
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        images = [y for _, y in self.pairs]
        if len(set(images)) != len(images):
            raise ValueError("window map is not injective")

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def domain(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.pairs)

    def is_distance_preserving(self) -> bool:
        pts = self.pairs
        for i in range(len(pts)):
            xi, yi = pts[i]
            for j in range(i + 1, len(pts)):
                xj, yj = pts[j]
                if abs(xi - xj) != abs(yi - yj):
                    return False
        return True


def window_of(p: PartialIsometry, n: int) -> WindowMap:
    """Evaluate ``p`` pointwise on ``[-n, n]``.

    Arithmetic is inlined (hot path); it is the same checked fixed-width
    application the rest of the package uses.
    """
    eps, a = p.gamma.eps, p.gamma.a
    excl = frozenset(p.excl.elems)
    pairs = []
    for x in range(-n, n + 1):
        if x not in excl:
            y = eps * x + a
            if y < INT_MIN or y > INT_MAX:
                raise CoordinateOverflowError(
                    f"image {y} outside signed 64-bit range"
                )
            pairs.append((x, y))
    return WindowMap(n, tuple(pairs))


def auto_window(*ps: PartialIsometry, margin: int = DEFAULT_MARGIN) -> int:
    """Smallest window covering all excluded coordinates and their images.

    With the margin, window equality of two (three, ...) elements is
    equivalent to equality of the elements themselves.
    """
    extent = 0
    for p in ps:
        g, ginv = p.gamma, p.gamma.inv()
        for x in p.excl:
            extent = max(extent, abs(x), abs(g(x)), abs(ginv(x)))
    return extent + margin


def product_window(
    stages: Sequence[PartialIsometry],
    *extra: PartialIsometry,
    margin: int = DEFAULT_MARGIN,
) -> int:
    """Window size for comparing a pointwise product against other elements.

    A source point is lost by the product when some stage is undefined at
    the value threaded to it, so every stage's excluded coordinates must be
    covered *pulled back through the preceding stages' isometries* -- their
    own coordinates alone are not enough.  The pullback uses unit-group
    arithmetic only, keeping the sizing independent of the closed-form set
    algebra.
    """
    extent = 0
    for p in (*stages, *extra):
        g, ginv = p.gamma, p.gamma.inv()
        for x in p.excl:
            extent = max(extent, abs(x), abs(g(x)), abs(ginv(x)))
    prefix = Isometry.identity()
    for p in stages:
        back = prefix.inv()
        for x in p.excl:
            extent = max(extent, abs(back(x)))
        prefix = prefix * p.gamma
    return extent + margin


def pointwise_product_window(
    ps: Sequence[PartialIsometry], n: int
) -> WindowMap:
    """Functional composition of ``ps`` (left to right), point by point.

    Never consults the closed-form product: a point survives exactly when
    every stage is defined at the value threaded through so far.
    """
    stages = [
        (p.gamma.eps, p.gamma.a, frozenset(p.excl.elems)) for p in ps
    ]
    pairs = []
    for x in range(-n, n + 1):
        y = x
        ok = True
        for eps, a, excl in stages:
            if y in excl:
                ok = False
                break
            y = eps * y + a
            if y < INT_MIN or y > INT_MAX:
                raise CoordinateOverflowError(
                    f"image {y} outside signed 64-bit range"
                )
        if ok:
            pairs.append((x, y))
    return WindowMap(n, tuple(pairs))


def in_range_pointwise(p: PartialIsometry, y: int) -> bool:
    """Is ``y`` in the range of ``p``?  Checked via the functional preimage."""
    return p.defined_at(p.gamma.inv()(y))


def range_points(p: PartialIsometry, n: int) -> tuple[int, ...]:
    return tuple(y for y in range(-n, n + 1) if in_range_pointwise(p, y))


def is_restriction(small: WindowMap, big: WindowMap) -> bool:
    """Does ``small`` agree with ``big`` wherever ``small`` is defined?"""
    lookup = big.as_dict()
    return all(lookup.get(x) == y for x, y in small.pairs)


# ---------------------------------------------------------------------------
# Differential checks: closed form vs pointwise evaluation.

def oracle_mul_check(
    p: PartialIsometry, q: PartialIsometry, n: int | None = None
) -> bool:
    """Does the closed-form product match pointwise composition on [-n, n]?

    The window is sized independently from the stages (plus, harmlessly,
    whatever the closed form claims -- enlarging the window can only expose
    more differences, never hide one).
    """
    if n is None:
        n = max(product_window((p, q)), auto_window(p * q))
    return window_of(p * q, n) == pointwise_product_window((p, q), n)


def oracle_inv_check(p: PartialIsometry, n: int | None = None) -> bool:
    """Inverse axioms, evaluated pointwise: pxp = p and xpx = x for x = p⁻¹."""
    x = p.inv()
    if n is None:
        n = max(product_window((p, x, p)), product_window((x, p, x)))
    return (
        pointwise_product_window((p, x, p), n) == window_of(p, n)
        and pointwise_product_window((x, p, x), n) == window_of(x, n)
    )


def oracle_leq_check(
    p: PartialIsometry, q: PartialIsometry, n: int | None = None
) -> bool:
    """Does closed-form order agree with the restriction-of-maps test?"""
    if n is None:
        n = auto_window(p, q)
    pointwise = is_restriction(window_of(p, n), window_of(q, n))
    return pointwise == p.leq(q)


def oracle_solve(
    a: PartialIsometry,
    b: PartialIsometry,
    side: str,
    bound: FinSet | None = None,
) -> list[PartialIsometry]:
    """Exhaustive search for all x with ``a*x == b`` (right) or ``x*a == b``.

    The underlying isometry of any solution is forced by the unit-group
    equation; the excluded set is searched over all subsets of ``bound``,
    each candidate accepted or rejected purely by pointwise composition.
    ``bound`` defaults to the finite superset known to contain every
    solution's excluded set.
    """
    if side == "right":
        rho = a.gamma.inv() * b.gamma
        if bound is None:
            bound = b.excl.image(a.gamma)
    elif side == "left":
        rho = b.gamma * a.gamma.inv()
        if bound is None:
            bound = b.excl
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    # One window size covers every candidate: they all exclude subsets of
    # ``bound``, so size for the largest, including its pulled-back
    # exclusions (a candidate can knock out a source point far outside its
    # own coordinates).
    largest = PartialIsometry(rho, bound)
    stages_max = (a, largest) if side == "right" else (largest, a)
    n = product_window(stages_max, b)
    target = window_of(b, n)
    found = []
    coords = bound.elems
    for mask in range(1 << len(coords)):
        h = FinSet(c for i, c in enumerate(coords) if mask >> i & 1)
        x = PartialIsometry(rho, h)
        stages = (a, x) if side == "right" else (x, a)
        if pointwise_product_window(stages, n) == target:
            found.append(x)
    return sorted(found, key=sort_key)


def domain_points(p: PartialIsometry, n: int) -> tuple[int, ...]:
    return tuple(x for x in range(-n, n + 1) if p.defined_at(x))


def oracle_r_related(
    p: PartialIsometry, q: PartialIsometry, n: int | None = None
) -> bool:
    """Green's R, pointwise: equal domains within the window."""
    if n is None:
        n = auto_window(p, q)
    return domain_points(p, n) == domain_points(q, n)


def oracle_l_related(
    p: PartialIsometry, q: PartialIsometry, n: int | None = None
) -> bool:
    """Green's L, pointwise: equal ranges within the window."""
    if n is None:
        n = auto_window(p, q)
    return range_points(p, n) == range_points(q, n)


def oracle_d_related(p: PartialIsometry, q: PartialIsometry) -> bool:
    """Green's D by explicit existential search.

    Looks for an intermediate element with the domain of ``q`` and the
    range of ``p``, sweeping every candidate isometry whose shift could
    possibly match the two excluded sets up.
    """
    coords = [0]
    coords.extend(abs(c) for c in p.range_excl)
    coords.extend(abs(c) for c in q.excl)
    m = 2 * max(coords) + 2
    for eps in (1, -1):
        for shift in range(-m, m + 1):
            x = PartialIsometry(Isometry(eps, shift), q.excl)
            n = auto_window(p, q, x)
            if oracle_r_related(x, q, n) and oracle_l_related(x, p, n):
                return True
    return False


# ---------------------------------------------------------------------------
# Seeded random generation and the oracle-check suite.

def random_isometry(rng: random.Random, coord_bound: int = 50) -> Isometry:
    return Isometry(rng.choice((1, -1)), rng.randint(-coord_bound, coord_bound))


def random_element(
    rng: random.Random, coord_bound: int = 50, max_excl: int = 6
) -> PartialIsometry:
    size = rng.randint(0, max_excl)
    universe = range(-coord_bound, coord_bound + 1)
    return PartialIsometry(
        random_isometry(rng, coord_bound),
        FinSet(rng.sample(universe, size)),
    )


def restricted_copy(
    rng: random.Random, p: PartialIsometry, coord_bound: int = 50
) -> PartialIsometry:
    """A random element below ``p`` in the natural order."""
    extra = FinSet(
        rng.randint(-coord_bound, coord_bound)
        for _ in range(rng.randint(0, 3))
    )
    return PartialIsometry(p.gamma, p.excl | extra)


def run_oracle_suite(
    seed: int,
    samples: int,
    window: int | None = None,
    max_failures: int = 10,
) -> dict:
    """Differential test battery; the report is JSON-ready.

    Runs ``samples`` random cases of the product/inverse/order checks, and
    ``samples // 10`` (at least one) of the search-based checks (solving and
    Green's D) at smaller coordinates, since those enumerate candidates.
    When ``window`` is given it fixes the window size and the coordinate
    bound shrinks to ``window // 3`` so that every image stays inside.
    """
    from . import solvers  # local import: solvers itself imports nothing from here

    rng = random.Random(seed)
    coord_bound = max(1, window // 3) if window is not None else 50

    counts: dict[str, int] = {}
    failures: list[dict] = []

    def record(check: str, ok: bool, detail: str) -> None:
        counts[check] = counts.get(check, 0) + 1
        if not ok and len(failures) < max_failures:
            failures.append({"check": check, "seed": seed, "detail": detail})

    for _ in range(samples):
        p = random_element(rng, coord_bound)
        q = random_element(rng, coord_bound)
        record("mul", oracle_mul_check(p, q, window), f"{p!r} * {q!r}")
        record("inv", oracle_inv_check(p, window), repr(p))
        below = restricted_copy(rng, p, coord_bound)
        record(
            "leq",
            oracle_leq_check(below, p, window)
            and oracle_leq_check(p, q, window),
            f"{p!r} vs {q!r}",
        )

    small = max(1, samples // 10)
    for _ in range(small):
        p = random_element(rng, 8, 4)
        q = random_element(rng, 8, 4)
        ups = solvers.upset(p)
        record(
            "upset",
            all(oracle_leq_check(p, u, window) and p.leq(u) for u in ups)
            and len(ups) == 2 ** len(p.excl),
            repr(p),
        )
        a = random_element(rng, 8, 3)
        chi = random_element(rng, 8, 3)
        b = a * chi if rng.random() < 0.5 else random_element(rng, 8, 3)
        record(
            "solve_right",
            solvers.solve_right(a, b).solutions
            == tuple(oracle_solve(a, b, "right")),
            f"{a!r}, {b!r}",
        )
        b2 = chi * a if rng.random() < 0.5 else random_element(rng, 8, 3)
        record(
            "solve_left",
            solvers.solve_left(a, b2).solutions
            == tuple(oracle_solve(a, b2, "left")),
            f"{a!r}, {b2!r}",
        )
        rel = solvers.green(p, q)
        ok = (
            rel.r == oracle_r_related(p, q, window)
            and rel.l == oracle_l_related(p, q, window)
            and rel.d == oracle_d_related(p, q)
        )
        record("green", ok, f"{p!r}, {q!r}")

    return {
        "passed": not failures,
        "seed": seed,
        "samples": samples,
        "window": window,
        "coord_bound": coord_bound,
        "checks": counts,
        "failures": failures,
    }
