"""HTTP face of the package.

Thin by design: every endpoint parses a request model, calls the core
routines, and wraps the result. Domain errors map to status codes instead
of tracebacks: bad input is 400, a degenerate orbit is 409, and request
shape problems keep the usual 422. All error bodies share one format.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import __version__
from .action import adjoint
from .blocks import BlockStructure, base_data
from .canonical import canonicalize_witness
from .diagram import diagram_json, parse_layers, render_diagram
from .exceptions import (
    BadIndexError,
    DegenerateOrbitError,
    NonSquareError,
    NotUnitriangularError,
    ParinvError,
    SizeMismatchError,
    SupportViolationError,
    ZeroBaseMinorError,
)
from .invariants import invariant_vector
from .linalg import format_scalar
from .schemas import (
    CanonicalPointFile,
    CanonicalizeRequest,
    CanonicalizeResponse,
    DiagramRequest,
    DiagramResponse,
    Entry,
    ErrorInfo,
    ErrorResponse,
    GroupElement,
    InvariantsRequest,
    InvariantsResponse,
    SweepRequest,
    SweepResponse,
    VerifyRequest,
    VerifyResponse,
)
from .verify import run_suites, sweep_rows

_BAD_REQUEST = (
    SupportViolationError,
    BadIndexError,
    NotUnitriangularError,
    SizeMismatchError,
    NonSquareError,
)
_DEGENERATE = (DegenerateOrbitError, ZeroBaseMinorError)


def _error_json(status: int, exc: Exception) -> JSONResponse:
    info = ErrorInfo(type=type(exc).__name__, message=str(exc))
    if isinstance(exc, DegenerateOrbitError):
        info.stage = exc.stage
        if exc.position is not None:
            info.position = list(exc.position)
    body = ErrorResponse(error=info)
    return JSONResponse(status_code=status, content=body.model_dump())


def create_app() -> FastAPI:
    app = FastAPI(title="parinv", version=__version__)

    @app.exception_handler(ValueError)
    async def _on_value_error(request: Request, exc: ValueError) -> JSONResponse:
        return _error_json(400, exc)

    @app.exception_handler(ParinvError)
    async def _on_domain_error(request: Request, exc: ParinvError) -> JSONResponse:
        if isinstance(exc, _DEGENERATE):
            return _error_json(409, exc)
        if isinstance(exc, _BAD_REQUEST):
            return _error_json(400, exc)
        return _error_json(500, exc)

    @app.exception_handler(RequestValidationError)
    async def _on_validation(request: Request, exc: RequestValidationError) -> JSONResponse:
        parts = []
        for err in exc.errors():
            where = ".".join(str(piece) for piece in err.get("loc", ()))
            parts.append(f"{where}: {err.get('msg', 'invalid')}")
        info = ErrorInfo(type="RequestValidationError", message="; ".join(parts))
        return JSONResponse(status_code=422, content=ErrorResponse(error=info).model_dump())

    @app.get("/health")
    async def health() -> dict:
        return {"ok": True, "version": __version__}

    @app.post("/diagram")
    async def diagram(req: DiagramRequest) -> DiagramResponse:
        bd = base_data(BlockStructure(tuple(req.blocks)))
        layers = parse_layers(",".join(req.layers))
        return DiagramResponse(
            text=render_diagram(bd, layers),
            data=diagram_json(bd, layers),
        )

    @app.post("/invariants")
    async def invariants(req: InvariantsRequest) -> InvariantsResponse:
        bd = base_data(req.matrix.structure())
        values = invariant_vector(bd, req.matrix.matrix())
        return InvariantsResponse(
            base=[
                Entry(i=i, j=j, value=format_scalar(values[(i, j)]))
                for (i, j) in sorted(bd.base)
            ],
            derived=[
                Entry(i=i, j=j, value=format_scalar(values[(i, j)]))
                for (i, j) in sorted(bd.derived)
            ],
        )

    @app.post("/canonicalize")
    async def canonicalize(req: CanonicalizeRequest) -> CanonicalizeResponse:
        bd = base_data(req.matrix.structure())
        x = req.matrix.matrix()
        res = canonicalize_witness(bd, x)
        out = CanonicalizeResponse(
            point=CanonicalPointFile.from_point(res.point),
            zero_coefficients=[list(root) for root in res.zero_coefficients],
        )
        if req.witness:
            out.witness = GroupElement.from_matrix(res.witness)
        if req.check:
            y = res.point.matrix()
            out.check_passed = (
                adjoint(res.witness, x) == y
                and invariant_vector(bd, y) == invariant_vector(bd, x)
            )
        return out

    @app.post("/verify")
    async def verify(req: VerifyRequest) -> VerifyResponse:
        report = run_suites(
            tuple(req.suites), max_n=req.max_n, trials=req.trials, seed=req.seed
        )
        return VerifyResponse.from_report(report)

    @app.post("/sweep")
    async def sweep(req: SweepRequest) -> SweepResponse:
        return SweepResponse(n=req.n, rows=sweep_rows(req.n))

    return app


app = create_app()
