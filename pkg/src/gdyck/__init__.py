"""Periodic generalized Dyck and Motzkin paths, exclusion statistics and lattice-walk areas.

Exact arithmetic throughout: counts are ints, coefficients are Fractions, and
polynomials in ``Q`` are :class:`~gdyck.symbolic.Laurent` objects.
"""
from .coefficients import (
    FloorCount,
    FloorCountTable,
    c_1g,
    c_g,
    dyck_floor_counts,
    motzkin_floor_counts,
    total_dyck_bridges,
    total_motzkin_bridges,
)
from .compositions import (
    GComposition,
    MixedComposition,
    count_g_compositions,
    count_mixed_compositions,
    enumerate_g_compositions,
    enumerate_mixed_compositions,
    gnomial,
)
from .errors import ConsistencyError, DomainError, ResourceLimitError
from .exclusion import (
    ExclusionMatrix,
    SpectralData,
    cluster_coefficients,
    exclusion_matrix,
    partition_functions,
    secular_determinant,
    spectral_s,
    trace_power,
    trace_via_formula,
)
from .hofstadter import (
    SquareWalk,
    WeylPolynomial,
    area_polynomial_via_trace,
    walk_area,
    walk_area_histogram,
    weyl_expand_power,
)
from .paths import LatticePath, enumerate_dyck_bridges, enumerate_motzkin_bridges
from .symbolic import Laurent, TruncatedSeries, series_exp, series_log

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "DomainError", "ExclusionMatrix", "FloorCount", "FloorCountTable",
    "GComposition", "LatticePath", "Laurent", "MixedComposition", "ResourceLimitError",
    "SpectralData", "SquareWalk", "TruncatedSeries", "WeylPolynomial",
    "area_polynomial_via_trace", "c_1g", "c_g", "cluster_coefficients", "count_g_compositions",
    "count_mixed_compositions", "dyck_floor_counts", "enumerate_dyck_bridges",
    "enumerate_g_compositions", "enumerate_mixed_compositions", "enumerate_motzkin_bridges",
    "exclusion_matrix", "gnomial", "motzkin_floor_counts", "partition_functions",
    "secular_determinant", "series_exp", "series_log", "spectral_s", "total_dyck_bridges",
    "total_motzkin_bridges", "trace_power", "trace_via_formula", "walk_area",
    "walk_area_histogram", "weyl_expand_power",
]
