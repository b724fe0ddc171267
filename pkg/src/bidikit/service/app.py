"""FastAPI application exposing the graph analyses.

Every analysis endpoint accepts a graph document in the request body and
returns a deterministic report: command echo, parameters, a status of ``ok``
or ``infeasible``, the per-command result, and a provenance block (engine
version plus edge order).  Input problems map to HTTP 400 with a stable error
code; infeasible outcomes (no factor, failed verification) are ordinary 200
responses flagged ``infeasible``.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__, documents
from ..circular import circular_components, circular_edges
from ..core import BidirectedGraph, Sign
from ..dot import export_dot
from ..errors import InputError, NotFactorizableError, ValidationError
from ..factor import DegreeSpec, b_kl_decomposition, find_b_factor
from ..kl import kl_decomposition
from ..reach import reach_profile
from ..verify import all_passed, run_verification
from .models import (
    BFactorRequest,
    BKLRequest,
    CircularReport,
    CircularResult,
    ComponentsReport,
    ComponentsResult,
    EngineInfo,
    ExportDotRequest,
    FactorPartitionReport,
    FactorPartitionResult,
    FactorReport,
    FactorResultModel,
    GraphPayload,
    GraphRequest,
    PartitionReport,
    PartitionResult,
    Provenance,
    ReachReport,
    ReachRequest,
    ReachResult,
    SignedRequest,
    VerifyReport,
    VerifyResult,
)

_ENGINE = "bidikit"


def _materialize(payload: GraphPayload) -> tuple[BidirectedGraph, DegreeSpec | None]:
    doc = documents.document_from_mapping(
        payload.model_dump(exclude_none=True)
    )
    return documents.to_graph(doc), documents.degree_spec(doc)


def _provenance(g: BidirectedGraph) -> Provenance:
    return Provenance(
        engine=_ENGINE,
        version=__version__,
        edge_order=[e.id for e in g.edges],
    )


def _require_spec(spec: DegreeSpec | None) -> DegreeSpec:
    if spec is None:
        raise ValidationError("document has no 'b' degree map")
    return spec


def _sorted_edge_ids(g: BidirectedGraph, ids: Any) -> list[str]:
    return sorted(ids, key=g.edge_index)


def create_app() -> FastAPI:
    app = FastAPI(title="bidikit", version=__version__)

    @app.exception_handler(InputError)
    async def _input_error(_request: Request, exc: InputError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.get("/", response_model=EngineInfo)
    def info() -> EngineInfo:
        return EngineInfo(engine=_ENGINE, version=__version__)

    @app.post("/reach", response_model=ReachReport)
    def reach_endpoint(req: ReachRequest) -> ReachReport:
        g, _spec = _materialize(req.graph)
        profile = reach_profile(g, req.source, req.target)
        return ReachReport(
            command="reach",
            params={"from": req.source, "to": req.target},
            status="ok",
            result=ReachResult(
                source=req.source,
                target=req.target,
                profile={
                    f"({a.value},{b.value})": value
                    for (a, b), value in profile.exists.items()
                },
            ),
            provenance=_provenance(g),
        )

    @app.post("/circular", response_model=CircularReport)
    def circular_endpoint(req: GraphRequest) -> CircularReport:
        g, _spec = _materialize(req.graph)
        circ = circular_edges(g)
        return CircularReport(
            command="circular",
            params={},
            status="ok",
            result=CircularResult(circular_edges=_sorted_edge_ids(g, circ)),
            provenance=_provenance(g),
        )

    @app.post("/components", response_model=ComponentsReport)
    def components_endpoint(req: GraphRequest) -> ComponentsReport:
        g, _spec = _materialize(req.graph)
        structure = circular_components(g)
        return ComponentsReport(
            command="components",
            params={},
            status="ok",
            result=ComponentsResult(
                components=[list(comp) for comp in structure.components],
                circular_edges=_sorted_edge_ids(g, structure.circular_edges),
            ),
            provenance=_provenance(g),
        )

    @app.post("/kl", response_model=PartitionReport)
    def kl_endpoint(req: SignedRequest) -> PartitionReport:
        g, _spec = _materialize(req.graph)
        partition = kl_decomposition(g, req.sign)
        return PartitionReport(
            command="kl",
            params={"sign": req.sign},
            status="ok",
            result=PartitionResult(
                sign=req.sign,
                classes=[list(cls) for cls in partition.classes],
            ),
            provenance=_provenance(g),
        )

    @app.post("/bfactor", response_model=FactorReport)
    def bfactor_endpoint(req: BFactorRequest) -> FactorReport:
        g, spec = _materialize(req.graph)
        result = find_b_factor(g, _require_spec(spec), req.force, req.forbid)
        return FactorReport(
            command="bfactor",
            params={"force": req.force, "forbid": req.forbid},
            status="ok" if result.found else "infeasible",
            result=FactorResultModel(
                found=result.found,
                edges=_sorted_edge_ids(g, result.edges) if result.found else None,
            ),
            provenance=_provenance(g),
        )

    @app.post("/bkl", response_model=FactorPartitionReport)
    def bkl_endpoint(req: BKLRequest) -> FactorPartitionReport:
        g, spec = _materialize(req.graph)
        try:
            partition = b_kl_decomposition(
                g, _require_spec(spec), req.sign, method=req.method
            )
            result = FactorPartitionResult(
                sign=req.sign,
                classes=[list(cls) for cls in partition.classes],
                factorizable=True,
            )
            status = "ok"
        except NotFactorizableError:
            result = FactorPartitionResult(
                sign=req.sign, classes=None, factorizable=False
            )
            status = "infeasible"
        return FactorPartitionReport(
            command="bkl",
            params={"sign": req.sign, "method": req.method},
            status=status,
            result=result,
            provenance=_provenance(g),
        )

    @app.post("/verify", response_model=VerifyReport)
    def verify_endpoint(req: GraphRequest) -> VerifyReport:
        g, spec = _materialize(req.graph)
        outcomes = run_verification(g, spec)
        passed = all_passed(outcomes)
        return VerifyReport(
            command="verify",
            params={},
            status="ok" if passed else "infeasible",
            result=VerifyResult(
                passed=passed,
                checks=[
                    {"name": o.name, "status": o.status, "detail": o.detail}
                    for o in outcomes
                ],
            ),
            provenance=_provenance(g),
        )

    @app.post("/export-dot", response_class=PlainTextResponse)
    def export_dot_endpoint(req: ExportDotRequest) -> PlainTextResponse:
        g, _spec = _materialize(req.graph)
        partition = None
        if req.sign is not None:
            partition = kl_decomposition(g, Sign.parse(req.sign))
        return PlainTextResponse(export_dot(g, partition))

    return app
