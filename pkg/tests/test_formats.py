"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_formats.py
@DateTime: 2026-10-17
@Docs: Tests for formats.py module.
formats.py 模块测试。
"""

from pathlib import Path

import pytest

from fractal_intdim.exceptions import DomainError
from fractal_intdim.formats import OutputFormat, extension_for, format_for_path


class TestOutputFormat:
    """Tests for OutputFormat lookups.
    OutputFormat 查询测试。
    """

    def test_extensions(self) -> None:
        assert [extension_for(f) for f in OutputFormat] == [".csv", ".json", ".svg"]
        assert extension_for("json") == ".json"

    def test_unknown_format_string(self) -> None:
        with pytest.raises(ValueError):
            extension_for("xlsx")


class TestFormatForPath:
    """Tests for format_for_path.
    format_for_path 测试。
    """

    @pytest.mark.parametrize(
        ("name", "expected"),
        [("curve.csv", OutputFormat.CSV), ("report.JSON", OutputFormat.JSON), ("plot.svg", OutputFormat.SVG)],
    )
    def test_suffix(self, name: str, expected: OutputFormat) -> None:
        assert format_for_path(Path("out") / name) is expected

    def test_unknown_suffix(self) -> None:
        with pytest.raises(DomainError) as ei:
            format_for_path("curve.xlsx")
        assert ei.value.error_code == "bad_output_format"
        assert ei.value.details["allowed"] == [".csv", ".json", ".svg"]
