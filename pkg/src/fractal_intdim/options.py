"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: options.py
@DateTime: 2026-10-17
@Docs: Explicit options for the output serializers.
输出序列化器的显式选项。
"""

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class WriteOptions:
    """Serializer options (explicit configuration layer).
    序列化选项（显式配置层）。

    Attributes:
        columns: Column order; None infers it from the rows.
        columns: 列顺序；None 表示从行中推断。
        line_ending: CSV line terminator.
        line_ending: CSV 行结束符。
        float_format: printf-style float format.
        float_format: printf 风格的浮点格式。
        comments: Lines written as "# ..." before the CSV header.
        comments: 写在 CSV 表头前的 "# ..." 注释行。
        markers: x positions drawn as dashed vertical lines in plots.
        markers: 图中绘制为竖直虚线的 x 位置。
        x_key: Row key of the plot abscissa.
        x_key: 图横轴对应的行键。
        y_key: Row key of the plot ordinate.
        y_key: 图纵轴对应的行键。
        title: Plot title.
        title: 图标题。
    """

    columns: list[str] | None = None
    line_ending: str = "\n"
    float_format: str = "%.15g"
    comments: tuple[str, ...] = ()
    markers: tuple[float, ...] = ()
    x_key: str = "theta"
    y_key: str = "dim"
    title: str | None = None
