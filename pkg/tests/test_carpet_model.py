"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_carpet_model.py
@DateTime: 2026-10-17
@Docs: Tests for carpet_model.py module.
carpet_model.py 模块测试。
"""

import math
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import pytest

from fractal_intdim.carpet_model import (
    CarpetSpec,
    ColumnProfile,
    format_carpet,
    gamma_floor,
    iterate,
    iterate_profile,
    parse_carpet,
    profile,
    read_carpet,
    same_grid_reduction,
)
from fractal_intdim.config import resolve_config
from fractal_intdim.exceptions import CapacityError, CarpetFormatError, DomainError

from tests.conftest import FIG_EXAMPLE_TEXT, carpet_from_counts


class TestParseCarpet:
    """Tests for the grid-file parser.
    网格文件解析器测试。
    """

    def test_fig_example(self) -> None:
        """First row of the file is row n / 文件首行对应第 n 行。"""
        spec = parse_carpet(FIG_EXAMPLE_TEXT)
        assert (spec.m, spec.n) == (2, 3)
        assert spec.cells == frozenset({(1, 1), (1, 3), (2, 2)})

    def test_format_is_inverse(self, fig_spec: CarpetSpec) -> None:
        assert format_carpet(fig_spec) == FIG_EXAMPLE_TEXT

    @pytest.mark.parametrize(
        ("text", "code"),
        [
            ("2 3\n10\n01\n10", "bad_grid"),
            ("2\n10\n01\n10\n", "bad_header"),
            ("2 x\n10\n01\n10\n", "bad_header"),
            ("3 3\n100\n010\n100\n", "bad_grid_shape"),
            ("2 3\n10\n01\n", "bad_grid"),
            ("2 3\n10\n011\n10\n", "ragged_rows"),
            ("2 3\n10\n0x\n10\n", "bad_character"),
            ("2 3\n00\n00\n00\n", "empty_carpet"),
        ],
    )
    def test_rejects(self, text: str, code: str) -> None:
        """Malformed files raise with a stable code / 格式错误时抛出稳定错误码。"""
        with pytest.raises(CarpetFormatError) as ei:
            parse_carpet(text)
        assert ei.value.error_code == code

    def test_read_carpet(self, fig_path: Path) -> None:
        assert read_carpet(fig_path) == parse_carpet(FIG_EXAMPLE_TEXT)

    def test_read_missing(self, tmp_path: Path) -> None:
        with pytest.raises(CarpetFormatError) as ei:
            read_carpet(tmp_path / "missing.grid")
        assert ei.value.error_code == "io_error"


class TestCarpetSpec:
    """Tests for CarpetSpec validation.
    CarpetSpec 校验测试。
    """

    def test_duplicate_cells(self) -> None:
        with pytest.raises(CarpetFormatError) as ei:
            CarpetSpec.from_cells(2, 3, [(1, 1), (1, 1)])
        assert ei.value.error_code == "duplicate_cell"

    def test_out_of_range(self) -> None:
        with pytest.raises(CarpetFormatError) as ei:
            CarpetSpec.from_cells(2, 3, [(3, 1)])
        assert ei.value.error_code == "cell_out_of_range"

    def test_column_counts(self, fig_spec: CarpetSpec) -> None:
        assert fig_spec.column_counts() == {1: 2, 2: 1}


class TestColumnProfile:
    """Tests for ColumnProfile.
    ColumnProfile 测试。
    """

    def test_fig_example_fields(self, fig_profile: ColumnProfile) -> None:
        """Derived statistics of the 2x3 example / 2x3 示例的派生统计量。"""
        p = fig_profile
        assert p.counts == (2, 1)
        assert (p.M, p.N, p.M0) == (2, 3, 2)
        assert p.gamma == pytest.approx(math.log(3) / math.log(2), abs=1e-15)
        assert p.groups == ((2, 1), (1, 1))
        assert p.t_low == pytest.approx(0.5 * math.log(2), abs=1e-15)
        # log N - H(P) with P = (2/3, 1/3)
        h = -(2 / 3) * math.log(2 / 3) - (1 / 3) * math.log(1 / 3)
        assert p.t_high == pytest.approx(math.log(3) - h, abs=1e-14)
        assert p.t_max == pytest.approx(math.log(2))
        assert not p.uniform_fibres

    def test_sorted_descending(self) -> None:
        p = ColumnProfile.from_counts(8, 27, [1, 2, 1, 2])
        assert p.counts == (2, 2, 1, 1)
        assert p.groups == ((2, 2), (1, 2))

    def test_uniform_fibres(self) -> None:
        """t_high = t_low for equal counts / 计数相同时 t_high = t_low。"""
        p = ColumnProfile.from_counts(2, 4, [3, 3])
        assert p.uniform_fibres
        assert p.t_high == p.t_low == pytest.approx(math.log(3))

    @pytest.mark.parametrize("counts", [[], [4, 1], [0, 1], [1, 1, 1]])
    def test_bad_counts(self, counts: list[int]) -> None:
        with pytest.raises(CarpetFormatError):
            ColumnProfile.from_counts(2, 3, counts)

    def test_bad_shape(self) -> None:
        with pytest.raises(CarpetFormatError) as ei:
            ColumnProfile.from_counts(3, 3, [1])
        assert ei.value.error_code == "bad_grid_shape"

    def test_hashable(self, fig_profile: ColumnProfile) -> None:
        """Profiles key caches / 列统计可用作缓存键。"""
        assert hash(fig_profile) == hash(ColumnProfile.from_counts(2, 3, [1, 2]))


class TestIterate:
    """Tests for iterate and iterate_profile.
    iterate 与 iterate_profile 测试。
    """

    def test_iterate_counts(self, fig_spec: CarpetSpec) -> None:
        """The k-fold iterate has N^k cells on the m^k x n^k grid / k 重迭代在 m^k x n^k 网格上有 N^k 个单元。"""
        it = iterate(fig_spec, 2)
        assert (it.m, it.n) == (4, 9)
        assert len(it.cells) == 9
        assert profile(it).counts == (4, 2, 2, 1)

    def test_iterate_matches_profile(self, fig_spec: CarpetSpec) -> None:
        assert profile(iterate(fig_spec, 3)) == iterate_profile(profile(fig_spec), 3)

    def test_iterate_one_is_identity(self, fig_spec: CarpetSpec) -> None:
        assert iterate(fig_spec, 1) is fig_spec

    def test_iterate_budget(self, fig_spec: CarpetSpec) -> None:
        with pytest.raises(CapacityError) as ei:
            iterate(fig_spec, 5, config=resolve_config(enumeration_budget=100))
        assert ei.value.error_code == "capacity"

    def test_iterate_profile_budget(self, fig_profile: ColumnProfile) -> None:
        with pytest.raises(CapacityError):
            iterate_profile(fig_profile, 20, config=resolve_config(enumeration_budget=1000))


class TestSameGridReduction:
    """Tests for same_grid_reduction.
    same_grid_reduction 测试。
    """

    def test_equal_grids(self) -> None:
        a, b = carpet_from_counts(8, 27, [6, 3]), carpet_from_counts(8, 27, [2, 2, 1, 1])
        assert same_grid_reduction(a, b).exponents == (1, 1)

    def test_power_grids(self) -> None:
        """2x3 and 8x27 meet at exponents (3, 1) / 2x3 与 8x27 在指数 (3, 1) 处相遇。"""
        a, b = carpet_from_counts(2, 3, [2, 1]), carpet_from_counts(8, 27, [6, 3])
        assert same_grid_reduction(a, b).exponents == (3, 1)

    def test_incomparable(self) -> None:
        a, b = carpet_from_counts(2, 4, [2, 1]), carpet_from_counts(3, 9, [3, 1])
        red = same_grid_reduction(a, b)
        assert red.exponents is None
        assert not red.bound_reached

    def test_bound_reached(self) -> None:
        a, b = carpet_from_counts(2, 3, [2, 1]), carpet_from_counts(8, 27, [6, 3])
        red = same_grid_reduction(a, b, config=resolve_config(exponent_bound=2))
        assert red.exponents is None
        assert red.bound_reached

    def test_exact_check_failure_raises(self) -> None:
        """A wrong exponent pair never passes silently / 错误的指数对不会被静默接受。"""
        a, b = carpet_from_counts(2, 3, [2, 1]), carpet_from_counts(4, 9, [3, 1])
        with patch("fractal_intdim.carpet_model._power_ratio", return_value=Fraction(1, 1)):
            with pytest.raises(DomainError) as ei:
                same_grid_reduction(a, b)
        assert ei.value.error_code == "grid_confirmation"
        assert ei.value.details["k_a"] == 1


class TestGammaFloor:
    """Tests for the exact floor(gamma k).
    精确 floor(gamma k) 测试。
    """

    @pytest.mark.parametrize(("k", "expected"), [(1, 1), (2, 3), (3, 4), (4, 6), (10, 15)])
    def test_values(self, k: int, expected: int) -> None:
        assert gamma_floor(2, 3, k) == expected

    def test_exact_power(self) -> None:
        """gamma = 2 exactly for 6x36 / 6x36 的 gamma 恰为 2。"""
        assert gamma_floor(6, 36, 7) == 14
