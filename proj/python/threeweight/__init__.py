"""Verification workbench for a family of three-weight p-ary cyclic codes."""

from ._core import (
    WorkbenchError,
    __version__,
    analyze,
    code_polynomials,
    dual_certify,
    enumerate_distribution,
    intersection_set_counts,
    predicted_distribution,
    s_sum,
    sphere_packing_max_d,
    t_sum,
    validate,
    value_distribution,
)

__all__ = [
    "WorkbenchError",
    "__version__",
    "analyze",
    "code_polynomials",
    "dual_certify",
    "enumerate_distribution",
    "intersection_set_counts",
    "predicted_distribution",
    "s_sum",
    "sphere_packing_max_d",
    "t_sum",
    "validate",
    "value_distribution",
]
