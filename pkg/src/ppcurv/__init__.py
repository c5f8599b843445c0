"""Symbolic curvature engine and structure classifier for exact wave metrics."""

__version__ = "0.1.0"

from .algebra import NormalForm
from .classify import ClassificationReport, Classifier, Verdict, compare_reports
from .curvature import CurvatureBundle
from .expr import (
    Binding,
    Expression,
    FunctionDecl,
    SymbolTable,
    differentiate,
    evaluate,
    instantiate,
    normalize,
    parse,
    pprint,
)
from .geometry import Chart, Metric, build_metric, load_metric_file, metric_from_dict
from .tensors import (
    Christoffel,
    Tensor,
    christoffel,
    contract,
    covariant_derivative,
    kulkarni_nomizu,
    lower_index,
    raise_index,
    ricci_power,
    tensor_product,
)
from .actions import curvature_action, tachibana
from .catalog import catalog, classify_metric, compare_metrics, load, run_suite

__all__ = [
    "Binding",
    "ClassificationReport",
    "Chart",
    "Christoffel",
    "Classifier",
    "CurvatureBundle",
    "Expression",
    "FunctionDecl",
    "Metric",
    "NormalForm",
    "SymbolTable",
    "Tensor",
    "Verdict",
    "build_metric",
    "catalog",
    "christoffel",
    "classify_metric",
    "compare_metrics",
    "compare_reports",
    "contract",
    "covariant_derivative",
    "curvature_action",
    "differentiate",
    "evaluate",
    "instantiate",
    "kulkarni_nomizu",
    "load",
    "load_metric_file",
    "lower_index",
    "metric_from_dict",
    "normalize",
    "parse",
    "pprint",
    "raise_index",
    "ricci_power",
    "run_suite",
    "tachibana",
    "tensor_product",
]
