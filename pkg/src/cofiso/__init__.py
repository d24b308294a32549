"""Exact computation in the inverse semigroup of cofinite partial isometries
of the integers, with an independent pointwise oracle, a FastAPI service and
a thin-client CLI.

Composition is left to right throughout: ``(p * q)(x) == q(p(x))``.
"""

from .core import (
    CoordinateOverflowError,
    FinSet,
    Isometry,
    PartialIsometry,
    UndefinedPointError,
    idempotent,
    sort_key,
)
from .solvers import (
    GreenRelations,
    SolutionSet,
    TooManySolutionsError,
    green,
    solve_left,
    solve_right,
    upset,
)
from .structure import (
    MCElem,
    SemidirectElem,
    from_semidirect,
    mc_embed,
    mc_project,
    sigma_max,
    sigma_related,
    to_semidirect,
    unit_above,
)

__version__ = "0.1.0"

__all__ = [
    "CoordinateOverflowError",
    "FinSet",
    "GreenRelations",
    "Isometry",
    "MCElem",
    "PartialIsometry",
    "SemidirectElem",
    "SolutionSet",
    "TooManySolutionsError",
    "UndefinedPointError",
    "from_semidirect",
    "green",
    "idempotent",
    "mc_embed",
    "mc_project",
    "sigma_max",
    "sigma_related",
    "solve_left",
    "solve_right",
    "sort_key",
    "to_semidirect",
    "unit_above",
    "upset",
]
