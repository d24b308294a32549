"""Request/response models for the service.

Elements travel as literal strings in the expression language
(``<+x+2|{-1,0}>``), bare isometries as ``+x+2``, finite sets as sorted JSON
arrays of integers.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class ExprRequest(BaseModel):
    expr: str


class PairRequest(BaseModel):
    left: str
    right: str


class ElementResponse(BaseModel):
    result: str


class LeqResponse(BaseModel):
    leq: bool


class SigmaEqResponse(BaseModel):
    sigma_eq: bool


class UpsetResponse(BaseModel):
    count: int
    elements: list[str]


class SolveRequest(BaseModel):
    a: str
    b: str


class SolveResponse(BaseModel):
    count: int
    solutions: list[str]
    unit_member: str | None


class GreenResponse(BaseModel):
    L: bool
    R: bool
    H: bool
    D: bool


class SemidirectModel(BaseModel):
    gamma: str
    ran_excl: list[int]


class McElemModel(BaseModel):
    idem_excl: list[int]
    t: str


class McMulRequest(BaseModel):
    left: McElemModel
    right: McElemModel


class CircleDemoRequest(BaseModel):
    max_n: int = Field(default=10, ge=1, le=1_000_000)
    tol: float = Field(default=1e-9, gt=0)


class CircleRow(BaseModel):
    n: int
    min_gap: float
    bound: float
    below_tol: bool


class CircleDemoResponse(BaseModel):
    rows: list[CircleRow]


class OracleCheckRequest(BaseModel):
    samples: int = Field(default=1000, ge=1, le=1_000_000)
    seed: int = 0
    window: int | None = Field(default=None, ge=3)


class OracleCheckResponse(BaseModel):
    passed: bool
    seed: int
    samples: int
    window: int | None
    coord_bound: int
    checks: dict[str, int]
    failures: list[dict]


class Prop38ScanRequest(BaseModel):
    coord_bound: int = Field(default=2, ge=0, le=4)


class Prop38Example(BaseModel):
    a: str
    b: str
    solutions: list[str]
    unit_member: str | None


class Prop38ScanResponse(BaseModel):
    coord_bound: int
    subset_pairs: int
    unit_pairs_per_subset_pair: int
    solvable: int
    solvable_without_unit: int
    unit_claim_holds: bool
    invalid_solutions: int
    gamma_samples: int
    gamma_samples_consistent: bool
    oracle_confirmed_examples: int
    example: Prop38Example | None


class ErrorInfo(BaseModel):
    error: str
    message: str
    line: int | None = None
    col: int | None = None


class HealthResponse(BaseModel):
    status: str
    version: str
