"""Exact value types for cofinite partial isometries of the integers.

An isometry of the integers is a map ``x -> eps*x + a`` with ``eps`` either
``+1`` or ``-1``.  A *cofinite partial isometry* is such a map restricted to
the complement of a finite set of integers.  Under composition of partial
maps these form an inverse semigroup; this module implements its elements in
canonical form together with the basic operations (product, inverse, natural
partial order, idempotent projections).

Conventions, fixed once for the whole package:

* **Composition is left to right.**  ``p * q`` applies ``p`` first and then
  ``q``, i.e. ``(p * q)(x) == q(p(x))`` wherever both sides are defined.
  All closed forms below are stated for this convention.

* **Overflow policy.**  Coordinates, shifts and every intermediate image are
  kept inside the signed 64-bit range ``[-2**63, 2**63 - 1]``.  Python
  integers would happily grow without bound; we deliberately emulate checked
  fixed-width arithmetic instead, so an out-of-range result raises
  :class:`CoordinateOverflowError` rather than silently producing a value no
  fixed-width port could reproduce.

* **Canonical form.**  Construction canonicalizes: excluded sets are stored
  strictly increasing and two values are equal as partial maps exactly when
  they are equal field-wise.  Non-canonical values are unrepresentable.

All types are immutable and hashable; all operations are pure functions, so
everything here is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

INT_MIN = -(1 << 63)
INT_MAX = (1 << 63) - 1


class CoordinateOverflowError(OverflowError):
    """A coordinate or image left the signed 64-bit range."""


class UndefinedPointError(LookupError):
    """A partial isometry was applied at a point outside its domain."""


def _checked(value: int, what: str = "value") -> int:
    if value < INT_MIN or value > INT_MAX:
        raise CoordinateOverflowError(
            f"{what} {value} outside signed 64-bit range"
        )
    return value


@dataclass(frozen=True, slots=True)
class Isometry:
    """A global isometry of the integers: ``x -> eps*x + a``.

    ``eps`` is ``+1`` for a translation and ``-1`` for a point reflection.
    These are exactly the units of the partial-isometry semigroup.
    """

    eps: int = 1
    a: int = 0

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")
        _checked(self.a, "shift")

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1, 0)

    @property
    def is_identity(self) -> bool:
        return self.eps == 1 and self.a == 0

    def __call__(self, x: int) -> int:
        _checked(x, "point")
        return _checked(self.eps * x + self.a, "image")

    def __mul__(self, other: "Isometry") -> "Isometry":
        # Left-to-right: (x)(self * other) == other(self(x)).
        if not isinstance(other, Isometry):
            return NotImplemented
        return Isometry(
            self.eps * other.eps,
            _checked(other.eps * self.a + other.a, "shift"),
        )

    def inv(self) -> "Isometry":
        return Isometry(self.eps, _checked(-self.eps * self.a, "shift"))

    def __repr__(self) -> str:
        sign = "+" if self.eps == 1 else "-"
        return f"Isometry({sign}x{self.a:+d})"


@dataclass(frozen=True, slots=True)
class FinSet:
    """A finite set of integers in canonical (strictly increasing) form.

    These are the elements of the free semilattice with unit over the
    integers: the operation is union (``|``) and the empty set is the unit.
    """

    elems: tuple[int, ...] = ()

    def __init__(self, elems: Iterable[int] = ()) -> None:
        canon = tuple(sorted(set(elems)))
        for x in canon:
            _checked(x, "element")
        object.__setattr__(self, "elems", canon)

    @classmethod
    def empty(cls) -> "FinSet":
        return cls(())

    def __contains__(self, x: int) -> bool:
        return x in self.elems

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __bool__(self) -> bool:
        return bool(self.elems)

    def __or__(self, other: "FinSet") -> "FinSet":
        if not isinstance(other, FinSet):
            return NotImplemented
        return FinSet(self.elems + other.elems)

    def __le__(self, other: "FinSet") -> bool:
        """Subset test."""
        return set(self.elems) <= set(other.elems)

    def difference(self, other: "FinSet") -> "FinSet":
        return FinSet(set(self.elems) - set(other.elems))

    def image(self, g: Isometry) -> "FinSet":
        """The set ``{g(x) for x in self}``, re-canonicalized."""
        return FinSet(g(x) for x in self.elems)

    def __repr__(self) -> str:
        return f"FinSet({{{', '.join(map(str, self.elems))}}})"


@dataclass(frozen=True, slots=True)
class PartialIsometry:
    """The isometry ``gamma`` restricted to the complement of ``excl``.

    The pair is unique: a cofinite partial isometry extends to exactly one
    global isometry, so equality of partial maps is field-wise equality.
    The domain is always cofinite by construction; there is no empty map
    and no zero element in this semigroup.
    """

    gamma: Isometry = field(default_factory=Isometry.identity)
    excl: FinSet = field(default_factory=FinSet.empty)

    def __post_init__(self) -> None:
        if not isinstance(self.gamma, Isometry):
            raise TypeError(f"gamma must be an Isometry, got {self.gamma!r}")
        if not isinstance(self.excl, FinSet):
            object.__setattr__(self, "excl", FinSet(self.excl))

    @classmethod
    def identity(cls) -> "PartialIsometry":
        return cls(Isometry.identity(), FinSet.empty())

    @property
    def is_idempotent(self) -> bool:
        return self.gamma.is_identity

    @property
    def is_unit(self) -> bool:
        return not self.excl

    @property
    def domain_excl(self) -> FinSet:
        """The finite set excluded from the domain."""
        return self.excl

    @property
    def range_excl(self) -> FinSet:
        """The finite set excluded from the range (the image of ``excl``)."""
        return self.excl.image(self.gamma)

    def defined_at(self, x: int) -> bool:
        return x not in self.excl

    def __call__(self, x: int) -> int:
        if not self.defined_at(x):
            raise UndefinedPointError(f"{x} is outside the domain")
        return self.gamma(x)

    def __mul__(self, other: "PartialIsometry") -> "PartialIsometry":
        """Composition of partial maps, ``self`` first then ``other``.

        Closed form: for ``(g, X) * (d, Y)`` the product is
        ``(g*d, X | Y.image(g.inv()))`` -- a point is lost either because
        ``self`` is undefined there or because its image lands in ``Y``.
        """
        if not isinstance(other, PartialIsometry):
            return NotImplemented
        return PartialIsometry(
            self.gamma * other.gamma,
            self.excl | other.excl.image(self.gamma.inv()),
        )

    def inv(self) -> "PartialIsometry":
        """The unique inverse: ``p * p.inv() * p == p`` and dually."""
        return PartialIsometry(self.gamma.inv(), self.excl.image(self.gamma))

    def leq(self, other: "PartialIsometry") -> bool:
        """Natural partial order: ``self`` is a restriction of ``other``.

        Equivalently ``self == other * e`` for some idempotent ``e``; in
        canonical form that is the same isometry with a larger excluded set.
        """
        return self.gamma == other.gamma and other.excl <= self.excl

    def idempotents(self) -> tuple["PartialIsometry", "PartialIsometry"]:
        """``(p * p.inv(), p.inv() * p)``: identity on domain, on range."""
        return (
            PartialIsometry(Isometry.identity(), self.excl),
            PartialIsometry(Isometry.identity(), self.range_excl),
        )

    def __repr__(self) -> str:
        return f"PartialIsometry({self.gamma!r}, {self.excl!r})"


def idempotent(excl: Iterable[int]) -> PartialIsometry:
    """The identity map defined everywhere except ``excl``."""
    return PartialIsometry(Isometry.identity(), FinSet(excl))


def sort_key(p: PartialIsometry) -> tuple[int, int, tuple[int, ...]]:
    """Total order used for all deterministic output.

    Lexicographic on ``(eps, shift, excluded set)``; unrelated to the
    natural partial order :meth:`PartialIsometry.leq`.
    """
    return (p.gamma.eps, p.gamma.a, p.excl.elems)
