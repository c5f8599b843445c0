"""Request/response models for the classification service."""

from __future__ import annotations

from typing import Any, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class FunctionDef(BaseModel):
    name: str
    depends: list[str]


class MetricDefinition(BaseModel):
    """User-supplied metric in the definition-file format."""

    model_config = ConfigDict(extra="allow")

    id: str = "user-metric"
    coordinates: list[str]
    parameters: list[str] = Field(default_factory=list)
    functions: list[FunctionDef] = Field(default_factory=list)
    components: list[list[str]]
    constraints: list[str] = Field(default_factory=list)
    notes: str = ""


class MetricSummary(BaseModel):
    id: str
    coordinates: list[str]
    notes: str = ""
    suites: list[str] = Field(default_factory=list)


class EngineOptions(BaseModel):
    seed: int = 0
    instantiations: int = 0
    points: int = 3
    lambda_expression: Optional[str] = Field(default=None, alias="lambda")
    natural_units: bool = False
    tolerance: float = 1e-6

    model_config = ConfigDict(populate_by_name=True)


class ComputeRequest(EngineOptions):
    metric: Union[str, MetricDefinition]
    tensor: str = "riemann"


class ComputeResponse(BaseModel):
    metric_id: str
    tensor: str
    components: dict[str, str]
    zero: bool
    scalar: Optional[str] = None


class ClassifyRequest(EngineOptions):
    metric: Union[str, MetricDefinition]
    structures: Optional[list[str]] = None


class VerdictModel(BaseModel):
    structure: str
    status: str
    witness: dict[str, Any] = Field(default_factory=dict)
    evidence: str = "symbolic"
    side_conditions: list[str] = Field(default_factory=list)
    samples: list[str] = Field(default_factory=list)


class ClassifyResponse(BaseModel):
    metric_id: str
    seed: int
    instantiations: int
    points: int
    verdicts: list[VerdictModel]


class CheckRequest(EngineOptions):
    metric: str
    suite: str


class SuiteItemResult(BaseModel):
    check: str
    expected_status: Optional[str] = None
    verdict: VerdictModel
    passed: bool
    item: Optional[str] = None
    note: Optional[str] = None
    problems: list[str] = Field(default_factory=list)


class CheckResponse(BaseModel):
    metric_id: str
    suite: str
    seed: int
    instantiations: int
    points: int
    passed: bool
    results: list[SuiteItemResult]


class CompareRequest(EngineOptions):
    metric_a: str
    metric_b: str
    structures: Optional[list[str]] = None


class CompareResponse(BaseModel):
    metrics: list[str]
    similarities: list[dict[str, Any]]
    dissimilarities: list[dict[str, Any]]


class ErrorResponse(BaseModel):
    detail: str
