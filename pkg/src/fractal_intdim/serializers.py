"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: serializers.py
@DateTime: 2026-10-17
@Docs: Built-in serializers for curve, family and report output.
曲线、族与报告输出的内置序列化器。

All serializers are deterministic: identical input gives byte-identical output.
所有序列化器均为确定性的：相同输入给出逐字节相同的输出。
"""

import csv
import io
from collections.abc import Iterable, Mapping
from typing import Any, Protocol

from pydantic import BaseModel, TypeAdapter

from fractal_intdim.exceptions import DomainError, FractalDimError
from fractal_intdim.options import WriteOptions

_ROWS = TypeAdapter(list[dict[str, Any]])


class Serializer(Protocol):
    """Serializer protocol.
    序列化器协议。
    """

    def serialize(self, *, data: Any, options: WriteOptions) -> bytes: ...


def _infer_columns(rows: Iterable[Mapping[str, Any]]) -> list[str]:
    """Infer the column order from iterable mapping rows.
    从映射行的可迭代对象中推断列顺序。

    Args:
        rows: Iterable of mapping rows.
            映射行的可迭代对象。

    Returns:
        list[str]: Inferred column name list.
            推断的列名列表。
    """
    columns: list[str] = []
    seen: set[str] = set()
    for row in rows:
        for k in row.keys():
            if k not in seen:
                seen.add(k)
                columns.append(k)
    return columns


def _cell(value: Any, float_format: str) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return float_format % value
    return str(value)


class CsvSerializer:
    """CSV serializer using stdlib csv.writer with fixed float formatting.
    使用标准库 csv.writer 并固定浮点格式的 CSV 序列化器。
    """

    default_columns: tuple[str, ...] = ()

    def serialize(self, *, data: Iterable[Mapping[str, Any]], options: WriteOptions) -> bytes:
        """Serialize rows to CSV, comment lines first.
        将行序列化为 CSV，注释行在前。

        Args:
            data: Iterable of mapping rows.
                映射行的可迭代对象。
            options: Write options.
                写出选项。

        Returns:
            bytes: UTF-8 CSV data.
                UTF-8 编码的 CSV 数据。
        """
        rows = list(data)
        fieldnames = options.columns or list(self.default_columns) or _infer_columns(rows)
        buf = io.StringIO()
        for line in options.comments:
            buf.write(f"# {line}{options.line_ending}")
        writer = csv.writer(buf, lineterminator=options.line_ending)
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_cell(row.get(k), options.float_format) for k in fieldnames])
        return buf.getvalue().encode("utf-8")


class CurveCsvSerializer(CsvSerializer):
    """Dimension curve CSV / 维数曲线 CSV。"""

    default_columns = ("theta", "dim", "L", "tL", "d_minus", "d_plus")


class FamilyCsvSerializer(CsvSerializer):
    """Closed-form family CSV / 闭式族 CSV。"""

    default_columns = ("theta", "value")


class JsonSerializer:
    """JSON serializer backed by pydantic.
    基于 pydantic 的 JSON 序列化器。
    """

    def serialize(self, *, data: Any, options: WriteOptions) -> bytes:
        """Serialize a model (aliases, no nulls) or a list of rows.
        序列化模型（使用别名、省略空值）或行列表。

        Args:
            data: BaseModel instance or iterable of mapping rows.
                BaseModel 实例或映射行的可迭代对象。
            options: Write options (unused).
                写出选项（未使用）。

        Returns:
            bytes: Indented JSON with a trailing newline.
                带缩进并以换行结尾的 JSON。
        """
        if isinstance(data, BaseModel):
            text = data.model_dump_json(by_alias=True, exclude_none=True, indent=2)
            return text.encode("utf-8") + b"\n"
        return _ROWS.dump_json([dict(r) for r in data], indent=2) + b"\n"


class SvgPlotSerializer:
    """Static SVG line plot using matplotlib.
    使用 matplotlib 的静态 SVG 折线图。
    """

    def serialize(self, *, data: Iterable[Mapping[str, Any]], options: WriteOptions) -> bytes:
        """Plot y_key against x_key with dashed markers.
        以 x_key 为横轴、y_key 为纵轴作图，并绘制虚线标记。

        Args:
            data: Iterable of mapping rows.
                映射行的可迭代对象。
            options: Write options (x_key, y_key, markers, title).
                写出选项（x_key、y_key、markers、title）。

        Returns:
            bytes: SVG document.
                SVG 文档。
        """
        rows = list(data)
        try:
            xs = [float(r[options.x_key]) for r in rows]
            ys = [float(r[options.y_key]) for r in rows]
        except KeyError as exc:
            raise DomainError(
                message=f"Plot rows lack column {exc.args[0]!r} / 绘图行缺少列 {exc.args[0]!r}",
                error_code="bad_plot_columns",
            ) from exc
        mpl, Figure = _require_matplotlib()
        # Fixed hash salt and no date keep the SVG byte-stable / 固定哈希盐且不写日期，保证 SVG 逐字节稳定
        with mpl.rc_context({"svg.hashsalt": "fractal-intdim", "svg.fonttype": "none"}):
            fig = Figure(figsize=(6.4, 4.0))
            ax = fig.add_subplot()
            ax.plot(xs, ys, color="black", linewidth=1.0)
            for m in options.markers:
                ax.axvline(m, color="grey", linestyle="--", linewidth=0.6)
            ax.set_xlabel(options.x_key)
            ax.set_ylabel(options.y_key)
            if options.title:
                ax.set_title(options.title)
            buf = io.BytesIO()
            fig.savefig(buf, format="svg", metadata={"Date": None})
        return buf.getvalue()


def _require_matplotlib() -> tuple[Any, Any]:
    """Ensure matplotlib is available and return (matplotlib, Figure).
    确保 matplotlib 可用并返回 (matplotlib, Figure)。

    Raises:
        FractalDimError: If matplotlib cannot be imported.
            无法导入 matplotlib 时抛出 FractalDimError。
    """
    try:
        import matplotlib
        from matplotlib.figure import Figure

        return matplotlib, Figure
    except Exception as exc:  # pragma: no cover
        raise FractalDimError(
            message="Missing optional dependency: matplotlib. Install extras: plot / 缺少可选依赖 matplotlib，请安装: plot",
            details={"error": str(exc)},
            error_code="missing_dependency",
        ) from exc
