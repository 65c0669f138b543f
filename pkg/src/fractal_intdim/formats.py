"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: formats.py
@DateTime: 2026-10-17
@Docs: Output format constants and helpers.
输出格式常量与辅助函数。
"""

from enum import StrEnum
from pathlib import Path

from fractal_intdim.exceptions import DomainError


class OutputFormat(StrEnum):
    """Supported output formats.
    支持的输出格式。
    """

    CSV = "csv"
    JSON = "json"
    SVG = "svg"


_EXTENSIONS: dict[OutputFormat, str] = {
    OutputFormat.CSV: ".csv",
    OutputFormat.JSON: ".json",
    OutputFormat.SVG: ".svg",
}


def extension_for(fmt: OutputFormat | str) -> str:
    """Return default file extension for a format.
    返回格式的默认文件扩展名。

    Args:
        fmt: Output format.
            输出格式。
    Returns:
        str: Default file extension for the format.
            格式的默认文件扩展名。

    """
    key = OutputFormat(fmt)
    return _EXTENSIONS[key]


def format_for_path(path: str | Path) -> OutputFormat:
    """Infer the output format from a file suffix.
    根据文件后缀推断输出格式。

    Raises:
        DomainError: Unknown suffix.
            未知后缀。
    """
    suffix = Path(path).suffix.lower()
    for fmt, ext in _EXTENSIONS.items():
        if ext == suffix:
            return fmt
    raise DomainError(
        message=f"Cannot infer output format from {str(path)!r} / 无法从文件名推断输出格式",
        details={"path": str(path), "allowed": sorted(_EXTENSIONS.values())},
        error_code="bad_output_format",
    )
