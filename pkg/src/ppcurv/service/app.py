"""HTTP interface to the curvature engine.

The service wraps the in-process engine: catalog listing, tensor
computation, structure classification, published-result suites and metric
comparison.  The command-line client talks to these endpoints (in-process by
default, over the network with ``--url``).
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..catalog import CatalogError, catalog, classify_metric, compare_metrics, run_suite
from ..classify import Classifier
from ..curvature import CurvatureBundle
from ..expr import ExprError, from_normal, pprint
from ..geometry import GeometryError, metric_from_dict
from .models import (
    CheckRequest,
    CheckResponse,
    ClassifyRequest,
    ClassifyResponse,
    CompareRequest,
    CompareResponse,
    ComputeRequest,
    ComputeResponse,
    MetricDefinition,
    MetricSummary,
)


def _user_bundle(defn: MetricDefinition, lam, natural_units: bool) -> CurvatureBundle:
    try:
        metric = metric_from_dict(defn.model_dump(by_alias=True))
    except (ExprError, GeometryError, KeyError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    return CurvatureBundle(metric, lam=lam, natural_units=natural_units)


def create_app() -> FastAPI:
    app = FastAPI(
        title="ppcurv",
        version=__version__,
        description=(
            "Symbolic curvature engine for exact wave metrics: tensors, "
            "normal forms and curvature-structure classification."
        ),
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/metrics", response_model=list[MetricSummary])
    def list_metrics():
        out = []
        for mid in catalog().ids():
            entry = catalog().entry(mid)
            out.append(
                MetricSummary(
                    id=mid,
                    coordinates=list(entry.definition["coordinates"]),
                    notes=entry.notes,
                    suites=sorted(entry.suites),
                )
            )
        return out

    @app.get("/metrics/{metric_id}")
    def show_metric(metric_id: str) -> dict:
        try:
            return catalog().entry(metric_id).to_dict()
        except CatalogError as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    @app.post("/compute", response_model=ComputeResponse)
    def compute(req: ComputeRequest):
        if isinstance(req.metric, str):
            try:
                entry = catalog().entry(req.metric)
            except CatalogError as exc:
                raise HTTPException(status_code=404, detail=str(exc))
            bundle = entry.bundle(lam=req.lambda_expression, natural_units=req.natural_units)
            metric_id = entry.id
        else:
            bundle = _user_bundle(req.metric, req.lambda_expression, req.natural_units)
            metric_id = req.metric.id
        if req.tensor == "scalar-curvature":
            value = pprint(from_normal(bundle.kappa))
            return ComputeResponse(
                metric_id=metric_id,
                tensor=req.tensor,
                components={},
                zero=bundle.kappa.is_zero,
                scalar=value,
            )
        try:
            tensor = bundle.tensor_by_name(req.tensor)
        except KeyError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        table = tensor.component_table()
        return ComputeResponse(
            metric_id=metric_id, tensor=req.tensor, components=table, zero=tensor.is_zero
        )

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(req: ClassifyRequest):
        try:
            if isinstance(req.metric, str):
                report = classify_metric(
                    req.metric,
                    structures=req.structures,
                    seed=req.seed,
                    instantiations=req.instantiations,
                    points=req.points,
                    lam=req.lambda_expression,
                    natural_units=req.natural_units,
                )
            else:
                bundle = _user_bundle(req.metric, req.lambda_expression, req.natural_units)
                classifier = Classifier(
                    bundle,
                    seed=req.seed,
                    instantiations=req.instantiations,
                    points=req.points,
                )
                report = classifier.run(req.structures)
                report.metric_id = req.metric.id
        except CatalogError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except KeyError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return ClassifyResponse(**report.to_dict())

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest):
        try:
            result = run_suite(
                req.metric,
                req.suite,
                seed=req.seed,
                instantiations=req.instantiations,
                points=req.points,
                lam=req.lambda_expression,
                natural_units=req.natural_units,
            )
        except CatalogError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return CheckResponse(**result)

    @app.post("/compare", response_model=CompareResponse)
    def compare(req: CompareRequest):
        try:
            result = compare_metrics(
                req.metric_a,
                req.metric_b,
                structures=req.structures,
                seed=req.seed,
                lam=req.lambda_expression,
                natural_units=req.natural_units,
            )
        except CatalogError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        return CompareResponse(**result)

    return app


app = create_app()
