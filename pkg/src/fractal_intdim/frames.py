"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: frames.py
@DateTime: 2026-10-17
@Docs: DataFrame views of sampled curves (facade with optional polars backend).
采样曲线的 DataFrame 视图（可选 polars 后端的门面）。
"""

from pathlib import Path
from typing import Any

from fractal_intdim.exceptions import FractalDimError


def _load_backend() -> Any:
    """Load optional DataFrame backend (polars) and return module.
    加载可选的 DataFrame 后端（polars）并返回模块。

    Raises FractalDimError when optional dependencies are not installed.
    当可选依赖未安装时抛出 FractalDimError。
    """
    try:
        from fractal_intdim import frames_polars

        return frames_polars
    except Exception as exc:  # pragma: no cover / 覆盖忽略
        raise FractalDimError(
            message="Missing optional dependencies for frames. Install extras: polars / 缺少 DataFrame 可选依赖，请安装: polars",
            details={"error": str(exc)},
            error_code="missing_dependency",
        ) from exc


def curve_to_frame(curve: Any) -> Any:
    """
    Convert a DimCurve or FamilyCurve to a DataFrame.
    将 DimCurve 或 FamilyCurve 转为 DataFrame。

    Args:
        curve: Sampled curve with to_rows().
        curve: 带 to_rows() 的采样曲线。

    Returns:
        pl.DataFrame: One row per sample.
        pl.DataFrame: 每个采样点一行。
    """
    backend = _load_backend()
    return backend.curve_to_frame(curve)


def read_curve_csv(path: str | Path) -> Any:
    """
    Read a curve CSV written by the CLI (comment lines skipped).
    读取命令行写出的曲线 CSV（跳过注释行）。
    """
    backend = _load_backend()
    return backend.read_curve_csv(Path(path))


def frame_curve(df: Any, *, value_column: str = "dim") -> Any:
    """
    Wrap a DataFrame as a sampled curve (thetas, values).
    将 DataFrame 包装为采样曲线 (thetas, values)。
    """
    backend = _load_backend()
    return backend.frame_curve(df, value_column=value_column)
