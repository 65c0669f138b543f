"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __init__.py
@DateTime: 2026-10-17
@Docs: Package exports for fractal_intdim.
fractal_intdim 包导出定义。
"""

from fractal_intdim.bounds_families import HSpec, hclass_check, lattice_dim, popcorn_dims, two_point_upper_bound
from fractal_intdim.carpet_intdim import DimCurve, ThetaGrid, curve, dim_box, dim_hausdorff, intermediate_dim
from fractal_intdim.carpet_model import CarpetSpec, ColumnProfile, parse_carpet, profile, read_carpet
from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import (
    CapacityError,
    CarpetFormatError,
    DomainError,
    FractalDimError,
    GridMismatchError,
    IterateEscapeError,
    RootSearchError,
)
from fractal_intdim.formats import OutputFormat
from fractal_intdim.moran_builder import MoranPlan, build_g_from_h, discretize, sliding_window_dim
from fractal_intdim.rate_function import RateFn, rate_I
from fractal_intdim.spectra_equivalence import EquivalenceDecision, equivalent_intdim, holder_bound

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "CapacityError",
    "CarpetFormatError",
    "CarpetSpec",
    "ColumnProfile",
    "DimCurve",
    "DomainError",
    "EquivalenceDecision",
    "FractalConfig",
    "FractalDimError",
    "GridMismatchError",
    "HSpec",
    "IterateEscapeError",
    "MoranPlan",
    "OutputFormat",
    "RateFn",
    "RootSearchError",
    "ThetaGrid",
    "build_g_from_h",
    "curve",
    "dim_box",
    "dim_hausdorff",
    "discretize",
    "equivalent_intdim",
    "hclass_check",
    "holder_bound",
    "intermediate_dim",
    "lattice_dim",
    "parse_carpet",
    "popcorn_dims",
    "profile",
    "rate_I",
    "read_carpet",
    "resolve_config",
    "sliding_window_dim",
    "two_point_upper_bound",
]
