"""FastAPI service exposing every operation of the package.

All computation endpoints are POST (they take structured input and are pure,
so repeating a request is always safe).  Domain failures map to structured
422 bodies with an ``error`` kind the clients can switch on: ``parse``
(with line/column), ``overflow``, ``too-many-solutions``.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, circle, oracle, solvers, structure
from ..core import CoordinateOverflowError, FinSet, PartialIsometry
from ..exprlang import (
    ExprSyntaxError,
    eval_expr,
    format_element,
    format_isometry,
    parse_isometry,
)
from . import schemas


def _element(text: str) -> PartialIsometry:
    return eval_expr(text)


def create_app() -> FastAPI:
    app = FastAPI(
        title="cofiso",
        version=__version__,
        description="Exact computation with cofinite partial isometries of the integers.",
    )

    @app.exception_handler(ExprSyntaxError)
    async def _parse_error(request: Request, exc: ExprSyntaxError):
        info = schemas.ErrorInfo(
            error="parse", message=exc.message, line=exc.line, col=exc.col
        )
        return JSONResponse(status_code=422, content=info.model_dump())

    @app.exception_handler(CoordinateOverflowError)
    async def _overflow_error(request: Request, exc: CoordinateOverflowError):
        info = schemas.ErrorInfo(error="overflow", message=str(exc))
        return JSONResponse(status_code=422, content=info.model_dump())

    @app.exception_handler(solvers.TooManySolutionsError)
    async def _too_many(request: Request, exc: solvers.TooManySolutionsError):
        info = schemas.ErrorInfo(error="too-many-solutions", message=str(exc))
        return JSONResponse(status_code=422, content=info.model_dump())

    @app.get("/healthz", response_model=schemas.HealthResponse)
    def healthz():
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/eval", response_model=schemas.ElementResponse)
    def eval_endpoint(req: schemas.ExprRequest):
        return schemas.ElementResponse(result=format_element(_element(req.expr)))

    @app.post("/leq", response_model=schemas.LeqResponse)
    def leq_endpoint(req: schemas.PairRequest):
        return schemas.LeqResponse(
            leq=_element(req.left).leq(_element(req.right))
        )

    @app.post("/upset", response_model=schemas.UpsetResponse)
    def upset_endpoint(req: schemas.ExprRequest):
        ups = solvers.upset(_element(req.expr))
        return schemas.UpsetResponse(
            count=len(ups), elements=[format_element(q) for q in ups]
        )

    def _solve_response(sol: solvers.SolutionSet) -> schemas.SolveResponse:
        return schemas.SolveResponse(
            count=len(sol),
            solutions=[format_element(x) for x in sol],
            unit_member=(
                format_element(sol.unit_member)
                if sol.unit_member is not None
                else None
            ),
        )

    @app.post("/solve-right", response_model=schemas.SolveResponse)
    def solve_right_endpoint(req: schemas.SolveRequest):
        return _solve_response(solvers.solve_right(_element(req.a), _element(req.b)))

    @app.post("/solve-left", response_model=schemas.SolveResponse)
    def solve_left_endpoint(req: schemas.SolveRequest):
        return _solve_response(solvers.solve_left(_element(req.a), _element(req.b)))

    @app.post("/sigma-max", response_model=schemas.ElementResponse)
    def sigma_max_endpoint(req: schemas.ExprRequest):
        return schemas.ElementResponse(
            result=format_element(structure.sigma_max(_element(req.expr)))
        )

    @app.post("/sigma-eq", response_model=schemas.SigmaEqResponse)
    def sigma_eq_endpoint(req: schemas.PairRequest):
        return schemas.SigmaEqResponse(
            sigma_eq=structure.sigma_related(
                _element(req.left), _element(req.right)
            )
        )

    @app.post("/green", response_model=schemas.GreenResponse)
    def green_endpoint(req: schemas.PairRequest):
        rel = solvers.green(_element(req.left), _element(req.right))
        return schemas.GreenResponse(L=rel.l, R=rel.r, H=rel.h, D=rel.d)

    @app.post("/to-semidirect", response_model=schemas.SemidirectModel)
    def to_semidirect_endpoint(req: schemas.ExprRequest):
        s = structure.to_semidirect(_element(req.expr))
        return schemas.SemidirectModel(
            gamma=format_isometry(s.gamma), ran_excl=list(s.ran_excl)
        )

    @app.post("/from-semidirect", response_model=schemas.ElementResponse)
    def from_semidirect_endpoint(req: schemas.SemidirectModel):
        s = structure.SemidirectElem(
            parse_isometry(req.gamma), FinSet(req.ran_excl)
        )
        return schemas.ElementResponse(
            result=format_element(structure.from_semidirect(s))
        )

    @app.post("/mc-embed", response_model=schemas.McElemModel)
    def mc_embed_endpoint(req: schemas.ExprRequest):
        m = structure.mc_embed(_element(req.expr))
        return schemas.McElemModel(
            idem_excl=list(m.idem_excl), t=format_isometry(m.t)
        )

    def _mc_from_model(model: schemas.McElemModel) -> structure.MCElem:
        return structure.MCElem(FinSet(model.idem_excl), parse_isometry(model.t))

    @app.post("/mc-mul", response_model=schemas.McElemModel)
    def mc_mul_endpoint(req: schemas.McMulRequest):
        m = _mc_from_model(req.left) * _mc_from_model(req.right)
        return schemas.McElemModel(
            idem_excl=list(m.idem_excl), t=format_isometry(m.t)
        )

    @app.post("/circle-demo", response_model=schemas.CircleDemoResponse)
    def circle_demo_endpoint(req: schemas.CircleDemoRequest):
        rows = circle.min_gap_rows(req.max_n, req.tol)
        return schemas.CircleDemoResponse(
            rows=[schemas.CircleRow(**row) for row in rows]
        )

    @app.post("/oracle-check", response_model=schemas.OracleCheckResponse)
    def oracle_check_endpoint(req: schemas.OracleCheckRequest):
        report = oracle.run_oracle_suite(
            seed=req.seed, samples=req.samples, window=req.window
        )
        return schemas.OracleCheckResponse(**report)

    @app.post("/prop38-scan", response_model=schemas.Prop38ScanResponse)
    def prop38_scan_endpoint(req: schemas.Prop38ScanRequest):
        report = solvers.scan_right_unit_claim(req.coord_bound)
        example = report.pop("example")
        if example is not None:
            example = schemas.Prop38Example(
                a=format_element(example["a"]),
                b=format_element(example["b"]),
                solutions=[format_element(x) for x in example["solutions"]],
                unit_member=None,
            )
        return schemas.Prop38ScanResponse(example=example, **report)

    return app


app = create_app()
