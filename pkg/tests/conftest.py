"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: conftest.py
@DateTime: 2026-10-17
@Docs: Shared test fixtures for the fractal-intdim test suite.
测试套件的公共 fixtures。
"""

from pathlib import Path

import pytest

from fractal_intdim.carpet_model import CarpetSpec, ColumnProfile, format_carpet, parse_carpet, profile
from fractal_intdim.config import FractalConfig, resolve_config

# 2x3 carpet with columns of sizes 2 and 1 / 列大小为 2 与 1 的 2x3 载毯
FIG_EXAMPLE_TEXT = "2 3\n10\n01\n10\n"


def carpet_from_counts(m: int, n: int, counts: list[int]) -> CarpetSpec:
    """Build a carpet whose column i holds counts[i] cells at the bottom rows.
    构建第 i 列在底部若干行占据 counts[i] 个单元格的载毯。

    Args:
        m: Horizontal base / 水平基数。
        n: Vertical base / 垂直基数。
        counts: Column counts, at most m entries / 列计数，至多 m 项。

    Returns:
        CarpetSpec: Carpet / 载毯。
    """
    cells = [(col + 1, row + 1) for col, c in enumerate(counts) for row in range(c)]
    return CarpetSpec.from_cells(m, n, cells)


def write_carpet(path: Path, spec: CarpetSpec) -> Path:
    """Write a carpet grid file and return its path.
    写出载毯网格文件并返回路径。
    """
    path.write_text(format_carpet(spec), encoding="ascii")
    return path


@pytest.fixture
def cfg() -> FractalConfig:
    """Default configuration, ignoring the environment.
    默认配置（忽略环境变量）。
    """
    return resolve_config(env_prefix="FRACTAL_INTDIM_TEST_UNSET")


@pytest.fixture
def fig_spec() -> CarpetSpec:
    """The 2x3 example carpet / 2x3 示例载毯。"""
    return parse_carpet(FIG_EXAMPLE_TEXT)


@pytest.fixture
def fig_profile(fig_spec: CarpetSpec) -> ColumnProfile:
    """Column profile (2, 1) on the 2x3 grid / 2x3 网格上的列统计 (2, 1)。"""
    return profile(fig_spec)


@pytest.fixture
def fig_path(tmp_path: Path) -> Path:
    """Grid file of the 2x3 example / 2x3 示例的网格文件。"""
    path = tmp_path / "fig.grid"
    path.write_text(FIG_EXAMPLE_TEXT, encoding="ascii")
    return path


@pytest.fixture
def equivalent_pair() -> tuple[CarpetSpec, CarpetSpec]:
    """Equivalent pair on the 8x27 grid: counts (6, 3) and (2, 2, 1, 1).
    8x27 网格上的等价对：列计数 (6, 3) 与 (2, 2, 1, 1)。
    """
    return carpet_from_counts(8, 27, [6, 3]), carpet_from_counts(8, 27, [2, 2, 1, 1])


@pytest.fixture
def bilip_pair() -> tuple[CarpetSpec, CarpetSpec]:
    """Inequivalent pair on the 32x243 grid with equal Hausdorff and box dimensions.
    32x243 网格上 Hausdorff 维数与盒维数均相同的不等价对。
    """
    a = [27, 27] + [3] * 11 + [1] * 19
    b = [27] + [9] * 6 + [1] * 25
    return carpet_from_counts(32, 243, a), carpet_from_counts(32, 243, b)


@pytest.fixture
def half_equal_profiles() -> tuple[ColumnProfile, ColumnProfile]:
    """Profiles 6x36 (9, 6) and 4x36 (6, 4) whose curves agree on [1/2, 1].
    曲线在 [1/2, 1] 上一致的列统计 6x36 (9, 6) 与 4x36 (6, 4)。
    """
    return ColumnProfile.from_counts(6, 36, [9, 6]), ColumnProfile.from_counts(4, 36, [6, 4])
