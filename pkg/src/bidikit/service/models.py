"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator


def _normalize_sign(value: str) -> str:
    return "-" if value == "−" else value


class EdgePayload(BaseModel):
    id: str
    u: str
    v: str
    su: str | None = None
    sv: str | None = None


class GraphPayload(BaseModel):
    """Wire form of a graph document; semantic validation happens in
    :mod:`bidikit.documents`."""

    kind: Literal["bidirected", "digraph", "signed+factor"] = "bidirected"
    vertices: list[str]
    edges: list[EdgePayload] | None = None
    arcs: list[tuple[str, str]] | None = None
    matching: list[str] | None = None
    b: dict[str, int] | None = None


class GraphRequest(BaseModel):
    graph: GraphPayload


class ReachRequest(GraphRequest):
    model_config = ConfigDict(populate_by_name=True)

    source: str = Field(alias="from")
    target: str = Field(alias="to")


class SignedRequest(GraphRequest):
    sign: Literal["+", "-"]

    @field_validator("sign", mode="before")
    @classmethod
    def _coerce_sign(cls, value: Any) -> Any:
        return _normalize_sign(value) if isinstance(value, str) else value


class BFactorRequest(GraphRequest):
    force: list[str] = Field(default_factory=list)
    forbid: list[str] = Field(default_factory=list)


class BKLRequest(SignedRequest):
    method: Literal["direct", "reduction"] = "direct"


class ExportDotRequest(GraphRequest):
    sign: Literal["+", "-"] | None = None

    @field_validator("sign", mode="before")
    @classmethod
    def _coerce_sign(cls, value: Any) -> Any:
        return _normalize_sign(value) if isinstance(value, str) else value


class EngineInfo(BaseModel):
    engine: str
    version: str


class Provenance(BaseModel):
    engine: str
    version: str
    edge_order: list[str]


class BaseReport(BaseModel):
    command: str
    params: dict[str, Any]
    status: Literal["ok", "infeasible"]
    provenance: Provenance


class ReachResult(BaseModel):
    source: str
    target: str
    profile: dict[str, bool]


class ReachReport(BaseReport):
    result: ReachResult


class CircularResult(BaseModel):
    circular_edges: list[str]


class CircularReport(BaseReport):
    result: CircularResult


class ComponentsResult(BaseModel):
    components: list[list[str]]
    circular_edges: list[str]


class ComponentsReport(BaseReport):
    result: ComponentsResult


class PartitionResult(BaseModel):
    sign: str
    classes: list[list[str]]


class PartitionReport(BaseReport):
    result: PartitionResult


class FactorPartitionResult(BaseModel):
    sign: str
    classes: list[list[str]] | None
    factorizable: bool


class FactorPartitionReport(BaseReport):
    result: FactorPartitionResult


class FactorResultModel(BaseModel):
    found: bool
    edges: list[str] | None


class FactorReport(BaseReport):
    result: FactorResultModel


class CheckItem(BaseModel):
    name: str
    status: Literal["pass", "fail", "skipped"]
    detail: str


class VerifyResult(BaseModel):
    passed: bool
    checks: list[CheckItem]


class VerifyReport(BaseReport):
    result: VerifyResult


class ErrorBody(BaseModel):
    code: str
    message: str


class ErrorEnvelope(BaseModel):
    error: ErrorBody
