"""Exact bases of weight-k automorphic forms for genus-zero Fuchsian groups.

The library works over exact rational q-expansions: a truncated series
substrate (:mod:`hauptbasis.qseries`), classical oracle series
(:mod:`hauptbasis.oracle`), a registry of genus-zero groups with their
Hauptmoduls (:mod:`hauptbasis.groups`), the dimension formula and basis
construction with its exact order ledger (:mod:`hauptbasis.basis`), and
floating-point verification of the transformation laws
(:mod:`hauptbasis.numeric`).
"""

from .basis import (
    Basis,
    LedgerEntry,
    OrderLedger,
    WeightData,
    build_basis,
    dim_forms,
    holomorphic_at_cusp,
    independent,
    order_ledger,
    span_equal,
    vertex_exponent,
    weight_exponents,
)
from .groups import (
    GROUP_NAMES,
    OO,
    GroupData,
    GroupElement,
    SampleElement,
    Vertex,
    classify,
    get_group,
    moebius_apply,
    transform_hauptmodul,
)
from .numeric import (
    EvalConfig,
    automorphy_residual,
    eval_series,
    invariance_residual,
    vanishing_slope,
)
from .oracle import (
    EtaQuotientSpec,
    discriminant,
    eisenstein4,
    eisenstein6,
    eta_quotient,
    j_invariant,
    sigma,
)
from .qseries import PrecisionError, QSeries, series_from_json, series_to_json

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "EtaQuotientSpec",
    "EvalConfig",
    "GROUP_NAMES",
    "GroupData",
    "GroupElement",
    "LedgerEntry",
    "OO",
    "OrderLedger",
    "PrecisionError",
    "QSeries",
    "SampleElement",
    "Vertex",
    "WeightData",
    "automorphy_residual",
    "build_basis",
    "classify",
    "dim_forms",
    "discriminant",
    "eisenstein4",
    "eisenstein6",
    "eta_quotient",
    "eval_series",
    "get_group",
    "holomorphic_at_cusp",
    "independent",
    "invariance_residual",
    "j_invariant",
    "moebius_apply",
    "order_ledger",
    "series_from_json",
    "series_to_json",
    "sigma",
    "span_equal",
    "transform_hauptmodul",
    "vanishing_slope",
    "vertex_exponent",
    "weight_exponents",
]
