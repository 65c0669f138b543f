"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: frames_polars.py
@DateTime: 2026-10-17
@Docs: Polars-based curve frames.
基于 Polars 的曲线数据框。
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np
import polars as pl

from fractal_intdim.exceptions import CarpetFormatError, DomainError


@dataclass(frozen=True, slots=True)
class FrameCurve:
    """
    Curve columns taken from a DataFrame.
    取自 DataFrame 的曲线列。

    Attributes:
        thetas: theta column.
        thetas: theta 列。
        values: Value column.
        values: 数值列。
    """

    thetas: np.ndarray
    values: np.ndarray


def curve_to_frame(curve: Any) -> pl.DataFrame:
    """
    Convert a curve with to_rows() to a Polars DataFrame.
    将带 to_rows() 的曲线转为 Polars DataFrame。

    Args:
        curve: DimCurve or FamilyCurve.
        curve: DimCurve 或 FamilyCurve。

    Returns:
        pl.DataFrame: Float columns, plus an Int64 "L" column for dimension curves.
        pl.DataFrame: 浮点列；维数曲线另含 Int64 类型的 "L" 列。
    """
    df = pl.DataFrame(curve.to_rows())
    if "L" in df.columns:
        df = df.with_columns(pl.col("L").cast(pl.Int64))
    return df


def read_curve_csv(path: Path) -> pl.DataFrame:
    """
    Read a curve CSV, skipping "#" comment lines.
    读取曲线 CSV，跳过 "#" 注释行。

    Raises:
        CarpetFormatError: Missing file or no theta column.
        CarpetFormatError: 文件缺失或缺少 theta 列。
    """
    try:
        df = pl.read_csv(str(path), comment_prefix="#")
    except (OSError, pl.exceptions.ComputeError) as exc:
        raise CarpetFormatError(
            message=f"Cannot read curve CSV {path}: {exc} / 无法读取曲线 CSV",
            details={"path": str(path)},
            error_code="bad_curve_csv",
        ) from exc
    if "theta" not in df.columns:
        raise CarpetFormatError(
            message=f"Curve CSV {path} has no theta column / 曲线 CSV 缺少 theta 列",
            details={"columns": df.columns},
            error_code="bad_curve_csv",
        )
    return df


def frame_curve(df: pl.DataFrame, *, value_column: str = "dim") -> FrameCurve:
    """
    Sampled curve view of a frame, sorted by theta.
    按 theta 排序的数据框采样曲线视图。
    """
    if value_column not in df.columns:
        raise DomainError(
            message=f"Frame has no {value_column!r} column / 数据框缺少 {value_column!r} 列",
            details={"columns": df.columns},
            error_code="bad_curve_frame",
        )
    ordered = df.sort("theta")
    return FrameCurve(
        thetas=ordered["theta"].cast(pl.Float64).to_numpy(),
        values=ordered[value_column].cast(pl.Float64).to_numpy(),
    )
