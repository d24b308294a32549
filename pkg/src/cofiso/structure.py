"""Quotient and product structure of the cofinite partial isometries.

Every element sits below exactly one unit (its global isometry), which
yields three interlocking descriptions of the semigroup:

* the projection onto units is a surjective homomorphism whose kernel
  congruence identifies elements with the same underlying isometry, and the
  quotient is the isometry group of the integers;
* each congruence class has a single maximal element (the unit itself), so
  stripping the exclusions is a well-defined "maximum of the class" map;
* the whole semigroup rebuilds as a semidirect product of the unit group
  acting on the semilattice of finite sets, in two equivalent coordinate
  systems: range-excluded pairs (:class:`SemidirectElem`) and
  domain-excluded pairs (:class:`MCElem`).  Keeping both is deliberate --
  cross-checking them against each other is part of the test surface.

The two coordinate systems are linked by ``E = X.image(gamma)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import FinSet, Isometry, PartialIsometry, _checked, idempotent


def unit_above(p: PartialIsometry) -> Isometry:
    """The unique unit over ``p``: its global isometry.

    As a map onto the unit group this is a surjective homomorphism.
    """
    return p.gamma


def sigma_related(p: PartialIsometry, q: PartialIsometry) -> bool:
    """Smallest group congruence: same unit above both.

    Equivalently, ``e*p == e*q`` for some idempotent ``e`` (restrict both
    away from each other's exclusions; see :func:`sigma_witness`).
    """
    return unit_above(p) == unit_above(q)


def sigma_witness(p: PartialIsometry, q: PartialIsometry) -> PartialIsometry | None:
    """An idempotent ``e`` with ``e*p == e*q``, or None if there is none."""
    e = idempotent(p.excl | q.excl)
    return e if e * p == e * q else None


def sigma_max(p: PartialIsometry) -> PartialIsometry:
    """The maximum of the congruence class of ``p``: its unit, exclusion-free."""
    return PartialIsometry(p.gamma, FinSet.empty())


# ---------------------------------------------------------------------------
# Conjugation actions of the unit group on idempotents.
#
# Idempotents are identity maps off a finite excluded set, so both actions
# are recorded on excluded sets.

def conjugate_right(e_excl: FinSet, g: Isometry) -> FinSet:
    """Excluded set of ``g.inv() * e * g``: the exclusions move through ``g``.

    Each such map is an automorphism of the semilattice of idempotents and
    ``g -> (E -> E.image(g))`` is a group homomorphism.
    """
    return e_excl.image(g)


def conjugate_left(t: Isometry, f_excl: FinSet) -> FinSet:
    """Excluded set of ``t * f * t.inv()``: the exclusions move through
    ``t.inv()``.  Inverse direction of :func:`conjugate_right`."""
    return f_excl.image(t.inv())


@dataclass(frozen=True, slots=True)
class SemidirectElem:
    """Unit paired with the range-excluded set of the element it encodes.

    Multiplication is the semidirect law
    ``(g1, E1) * (g2, E2) == (g1*g2, E1.image(g2) | E2)``:
    the first factor's exclusions are transported by the second unit, then
    joined in the semilattice.
    """

    gamma: Isometry = field(default_factory=Isometry.identity)
    ran_excl: FinSet = field(default_factory=FinSet.empty)

    def __mul__(self, other: "SemidirectElem") -> "SemidirectElem":
        if not isinstance(other, SemidirectElem):
            return NotImplemented
        return SemidirectElem(
            self.gamma * other.gamma,
            conjugate_right(self.ran_excl, other.gamma) | other.ran_excl,
        )

    @classmethod
    def identity(cls) -> "SemidirectElem":
        return cls()


def to_semidirect(p: PartialIsometry) -> SemidirectElem:
    """Encode ``p`` as (unit above it, excluded set of ``p.inv() * p``)."""
    return SemidirectElem(p.gamma, p.range_excl)


def from_semidirect(s: SemidirectElem) -> PartialIsometry:
    """Inverse of :func:`to_semidirect`: pull the range exclusions back."""
    return PartialIsometry(s.gamma, s.ran_excl.image(s.gamma.inv()))


@dataclass(frozen=True, slots=True)
class MCElem:
    """Element coordinates (domain idempotent, class maximum).

    The first coordinate is the excluded set of ``p * p.inv()``, the second
    the maximal element of the congruence class -- always a unit here, which
    is what makes the product law close over plain pairs:
    ``(f, u) * (g, v) == (f | g.image(u.inv()), u*v)``.
    """

    idem_excl: FinSet = field(default_factory=FinSet.empty)
    t: Isometry = field(default_factory=Isometry.identity)

    def __mul__(self, other: "MCElem") -> "MCElem":
        if not isinstance(other, MCElem):
            return NotImplemented
        return MCElem(
            self.idem_excl | conjugate_left(self.t, other.idem_excl),
            self.t * other.t,
        )

    @classmethod
    def identity(cls) -> "MCElem":
        return cls()


def mc_embed(p: PartialIsometry) -> MCElem:
    """Encode ``p`` as (excluded set of its domain idempotent, its unit)."""
    return MCElem(p.excl, p.gamma)


def mc_project(m: MCElem) -> PartialIsometry:
    """Inverse of :func:`mc_embed`."""
    return PartialIsometry(m.t, m.idem_excl)


def mc_to_semidirect(m: MCElem) -> SemidirectElem:
    """Change of coordinates ``E = X.image(gamma)`` between the two encodings."""
    return SemidirectElem(m.t, m.idem_excl.image(m.t))


def semidirect_to_mc(s: SemidirectElem) -> MCElem:
    return MCElem(s.ran_excl.image(s.gamma.inv()), s.gamma)


# ---------------------------------------------------------------------------
# The unit group in (shift, flip) coordinates.
#
# Encoding convention, fixed: flip bit 0 means no reflection (eps == +1),
# 1 means reflection (eps == -1); the integer is the shift.

def iso_to_pair(g: Isometry) -> tuple[int, int]:
    return (g.a, 0 if g.eps == 1 else 1)


def pair_to_iso(shift: int, flip: int) -> Isometry:
    if flip not in (0, 1):
        raise ValueError(f"flip bit must be 0 or 1, got {flip!r}")
    return Isometry(-1 if flip else 1, shift)


def pair_mul(x: tuple[int, int], y: tuple[int, int]) -> tuple[int, int]:
    """Product law making :func:`iso_to_pair` a group isomorphism.

    Stated directly on pairs (the isomorphism tests compare this against
    composing the isometries): the second flip acts on the first shift.
    """
    (z1, b1), (z2, b2) = x, y
    return (_checked((-z1 if b2 else z1) + z2, "shift"), b1 ^ b2)
