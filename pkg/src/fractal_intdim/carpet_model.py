"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: carpet_model.py
@DateTime: 2026-10-17
@Docs: Bedford-McMullen carpet model, column statistics and grid helpers.
Bedford-McMullen 载毯模型、列统计与网格辅助函数。

Grid file format / 网格文件格式:
        First line "m n", then n lines of exactly m characters from {0,1}.
        The first of these lines is grid row n, the last is grid row 1.
        首行 "m n"，随后 n 行、每行 m 个 0/1 字符；第一行为第 n 行，最后一行为第 1 行。
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from pathlib import Path

import numpy as np
from scipy.stats import entropy

from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import CapacityError, CarpetFormatError, DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CarpetSpec:
    """
    Carpet on an m x n digit grid.
    m x n 数字网格上的载毯。

    Attributes:
        m: Horizontal base (number of columns).
        m: 水平基数（列数）。
        n: Vertical base (number of rows), n > m.
        n: 垂直基数（行数），n > m。
        cells: Occupied cells as (column, row) pairs, both 1-based.
        cells: 被占用的单元格 (列, 行)，均从 1 开始。
    """

    m: int
    n: int
    cells: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if not 2 <= self.m < self.n:
            raise CarpetFormatError(
                message=f"Grid requires 2 <= m < n, got m={self.m}, n={self.n} / 网格要求 2 <= m < n",
                details={"m": self.m, "n": self.n},
                error_code="bad_grid_shape",
            )
        if not self.cells:
            raise CarpetFormatError(message="Carpet has no cells / 载毯没有单元格", error_code="empty_carpet")
        for i, j in self.cells:
            if not (1 <= i <= self.m and 1 <= j <= self.n):
                raise CarpetFormatError(
                    message=f"Cell {(i, j)} outside {self.m}x{self.n} grid / 单元格超出网格",
                    details={"cell": [i, j]},
                    error_code="cell_out_of_range",
                )

    @classmethod
    def from_cells(cls, m: int, n: int, cells: list[tuple[int, int]]) -> "CarpetSpec":
        """
        Build a spec from a cell list, rejecting duplicates.
        由单元格列表构建载毯，拒绝重复项。

        Args:
            m: Horizontal base.
            m: 水平基数。
            n: Vertical base.
            n: 垂直基数。
            cells: Cell list.
            cells: 单元格列表。

        Returns:
            CarpetSpec: Validated spec.
            CarpetSpec: 校验后的载毯。
        """
        dup = [c for c, k in Counter(cells).items() if k > 1]
        if dup:
            raise CarpetFormatError(
                message=f"Duplicate cells {dup} / 重复的单元格 {dup}",
                details={"duplicates": [list(c) for c in dup]},
                error_code="duplicate_cell",
            )
        return cls(m=m, n=n, cells=frozenset(cells))

    def column_counts(self) -> dict[int, int]:
        """
        Return the number of cells per non-empty column.
        返回每个非空列的单元格数。

        Returns:
            dict[int, int]: Column index -> count.
            dict[int, int]: 列号 -> 单元格数。
        """
        return dict(Counter(i for i, _ in self.cells))


@dataclass(frozen=True, slots=True)
class ColumnProfile:
    """
    Column statistics of a carpet.
    载毯的列统计量。

    Attributes:
        m: Horizontal base.
        m: 水平基数。
        n: Vertical base.
        n: 垂直基数。
        counts: Per-column map counts, sorted descending (length M).
        counts: 每列映射数，降序排列（长度 M）。
        gamma: log n / log m.
        gamma: log n / log m。
        M: Number of non-empty columns.
        M: 非空列数。
        N: Total number of maps.
        N: 映射总数。
        groups: Distinct counts with multiplicities, (N_i, R_i), N_i descending.
        groups: 不同计数及其重数 (N_i, R_i)，N_i 降序。
        t_low: Mean of log column counts.
        t_low: 列计数对数的均值。
        t_high: log N - H(P) with P the column distribution of maps.
        t_high: log N - H(P)，P 为映射的列分布。
        uniform_fibres: True when all column counts agree.
        uniform_fibres: 各列计数相同时为 True。
    """

    m: int
    n: int
    counts: tuple[int, ...]
    gamma: float = field(init=False)
    M: int = field(init=False)
    N: int = field(init=False)
    groups: tuple[tuple[int, int], ...] = field(init=False)
    t_low: float = field(init=False)
    t_high: float = field(init=False)
    uniform_fibres: bool = field(init=False)

    def __post_init__(self) -> None:
        if not 2 <= self.m < self.n:
            raise CarpetFormatError(
                message=f"Grid requires 2 <= m < n, got m={self.m}, n={self.n} / 网格要求 2 <= m < n",
                details={"m": self.m, "n": self.n},
                error_code="bad_grid_shape",
            )
        counts = tuple(sorted((int(c) for c in self.counts), reverse=True))
        if not counts or len(counts) > self.m or counts[-1] < 1 or counts[0] > self.n:
            raise CarpetFormatError(
                message=f"Invalid column counts {self.counts} for {self.m}x{self.n} grid / 列计数无效",
                details={"counts": list(self.counts)},
                error_code="bad_counts",
            )
        # Frozen dataclass: derived fields are set once here / 冻结数据类：派生字段仅在此处赋值
        object.__setattr__(self, "counts", counts)
        object.__setattr__(self, "gamma", math.log(self.n) / math.log(self.m))
        object.__setattr__(self, "M", len(counts))
        object.__setattr__(self, "N", sum(counts))
        grouped = sorted(Counter(counts).items(), reverse=True)
        object.__setattr__(self, "groups", tuple((int(v), int(r)) for v, r in grouped))
        logs = np.log(np.asarray(counts, dtype=float))
        uniform = len(grouped) == 1
        t_low = float(logs.mean())
        p = np.asarray(counts, dtype=float) / self.N
        t_high = t_low if uniform else float(math.log(self.N) - entropy(p))
        object.__setattr__(self, "uniform_fibres", uniform)
        object.__setattr__(self, "t_low", t_low)
        object.__setattr__(self, "t_high", t_high)

    @classmethod
    def from_counts(cls, m: int, n: int, counts: list[int] | tuple[int, ...]) -> "ColumnProfile":
        """
        Build a profile directly from column counts.
        直接由列计数构建列统计。

        Args:
            m: Horizontal base.
            m: 水平基数。
            n: Vertical base.
            n: 垂直基数。
            counts: Column counts in any order.
            counts: 任意顺序的列计数。

        Returns:
            ColumnProfile: Profile.
            ColumnProfile: 列统计。
        """
        return cls(m=m, n=n, counts=tuple(counts))

    @property
    def t_max(self) -> float:
        """Largest log column count / 最大列计数对数。"""
        return math.log(self.counts[0])

    @property
    def M0(self) -> int:
        """Number of distinct column counts / 不同列计数的个数。"""
        return len(self.groups)

    @property
    def group_logs(self) -> np.ndarray:
        """log N_i per group / 每组的 log N_i。"""
        return np.log(np.asarray([g for g, _ in self.groups], dtype=float))

    @property
    def group_mult(self) -> np.ndarray:
        """R_i per group / 每组的重数 R_i。"""
        return np.asarray([r for _, r in self.groups], dtype=float)

    @property
    def log_counts(self) -> np.ndarray:
        """log N_j per column / 每列的 log N_j。"""
        return np.log(np.asarray(self.counts, dtype=float))


@dataclass(frozen=True, slots=True)
class GridReduction:
    """
    Result of the same-grid search.
    同网格搜索结果。

    Attributes:
        exponents: Minimal (k_a, k_b), or None when absent.
        exponents: 最小 (k_a, k_b)；不存在时为 None。
        bound_reached: True when a solution exists only beyond the exponent bound.
        bound_reached: 仅在指数上限之外有解时为 True。
    """

    exponents: tuple[int, int] | None
    bound_reached: bool = False


def parse_carpet(text: str) -> CarpetSpec:
    """
    Parse grid-file content.
    解析网格文件内容。

    Args:
        text: File content.
        text: 文件内容。

    Returns:
        CarpetSpec: Parsed carpet.
        CarpetSpec: 解析后的载毯。

    Raises:
        CarpetFormatError: Malformed header, ragged rows, bad characters, empty occupancy or m >= n.
        CarpetFormatError: 表头错误、行长不齐、非法字符、无占用或 m >= n。
    """
    if not text.endswith("\n"):
        raise CarpetFormatError(message="Grid file must end with a newline / 网格文件须以换行结尾", error_code="bad_grid")
    lines = text[:-1].split("\n")
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise CarpetFormatError(
            message=f"Malformed header {lines[0]!r} / 表头格式错误", details={"header": lines[0]}, error_code="bad_header"
        )
    m, n = int(header[0]), int(header[1])
    if not 2 <= m < n:
        raise CarpetFormatError(
            message=f"Grid requires 2 <= m < n, got m={m}, n={n} / 网格要求 2 <= m < n",
            details={"m": m, "n": n},
            error_code="bad_grid_shape",
        )
    rows = lines[1:]
    if len(rows) != n:
        raise CarpetFormatError(
            message=f"Expected {n} rows, got {len(rows)} / 行数应为 {n}",
            details={"expected": n, "got": len(rows)},
            error_code="bad_grid",
        )
    cells: list[tuple[int, int]] = []
    for pos, line in enumerate(rows):
        if len(line) != m:
            raise CarpetFormatError(
                message=f"Row {pos + 2} has {len(line)} characters, expected {m} / 行长度错误",
                details={"line": pos + 2},
                error_code="ragged_rows",
            )
        bad = set(line) - {"0", "1"}
        if bad:
            raise CarpetFormatError(
                message=f"Row {pos + 2} contains {sorted(bad)} / 含非法字符",
                details={"line": pos + 2},
                error_code="bad_character",
            )
        row = n - pos
        cells.extend((col + 1, row) for col, ch in enumerate(line) if ch == "1")
    if not cells:
        raise CarpetFormatError(message="Carpet has no cells / 载毯没有单元格", error_code="empty_carpet")
    return CarpetSpec(m=m, n=n, cells=frozenset(cells))


def format_carpet(spec: CarpetSpec) -> str:
    """
    Serialize a carpet to the grid-file format.
    将载毯序列化为网格文件格式。

    Args:
        spec: Carpet.
        spec: 载毯。

    Returns:
        str: Grid-file text with trailing newline.
        str: 以换行结尾的网格文件文本。
    """
    out = [f"{spec.m} {spec.n}"]
    for row in range(spec.n, 0, -1):
        out.append("".join("1" if (col, row) in spec.cells else "0" for col in range(1, spec.m + 1)))
    return "\n".join(out) + "\n"


def read_carpet(path: str | Path) -> CarpetSpec:
    """
    Read and parse a grid file.
    读取并解析网格文件。

    Args:
        path: File path.
        path: 文件路径。

    Returns:
        CarpetSpec: Parsed carpet.
        CarpetSpec: 解析后的载毯。
    """
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise CarpetFormatError(
            message=f"Cannot read grid file {path} / 无法读取网格文件", details={"error": str(exc)}, error_code="io_error"
        ) from exc
    return parse_carpet(text)


def profile(spec: CarpetSpec) -> ColumnProfile:
    """
    Derive column statistics.
    计算列统计量。

    Args:
        spec: Carpet.
        spec: 载毯。

    Returns:
        ColumnProfile: Column profile.
        ColumnProfile: 列统计。
    """
    return ColumnProfile(m=spec.m, n=spec.n, counts=tuple(spec.column_counts().values()))


def iterate(spec: CarpetSpec, k: int, *, config: FractalConfig | None = None) -> CarpetSpec:
    """
    Carpet of the k-fold composed system on the m^k x n^k grid.
    k 重复合系统在 m^k x n^k 网格上的载毯。

    Args:
        spec: Carpet.
        spec: 载毯。
        k: Number of compositions (>= 1).
        k: 复合次数（>= 1）。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        CarpetSpec: Iterated carpet.
        CarpetSpec: 迭代后的载毯。

    Raises:
        CapacityError: When N^k exceeds the enumeration budget.
        CapacityError: N^k 超出枚举预算时抛出。
    """
    cfg = config or resolve_config()
    if k < 1:
        raise CapacityError(message=f"k must be >= 1, got {k} / k 必须 >= 1", error_code="bad_iterate")
    total = len(spec.cells) ** k
    if total > cfg.enumeration_budget:
        raise CapacityError(
            message=f"Iterate would hold {total} cells, budget {cfg.enumeration_budget} / 迭代单元数超出预算",
            details={"cells": total, "budget": cfg.enumeration_budget},
            error_code="capacity",
        )
    if k == 1:
        return spec
    base = sorted(spec.cells)
    cells = []
    for word in product(base, repeat=k):
        col = row = 0
        for i, j in word:
            # S_w = S_{w1} o ... o S_{wk}: leading letter is the coarsest digit / 首字母为最高位
            col = col * spec.m + (i - 1)
            row = row * spec.n + (j - 1)
        cells.append((col + 1, row + 1))
    logger.debug("iterate k=%d produced %d cells", k, len(cells))
    return CarpetSpec(m=spec.m**k, n=spec.n**k, cells=frozenset(cells))


def _factorize(value: int) -> dict[int, int]:
    """
    Prime factorization by trial division.
    试除法质因数分解。
    """
    out: dict[int, int] = {}
    d = 2
    while d * d <= value:
        while value % d == 0:
            out[d] = out.get(d, 0) + 1
            value //= d
        d += 1
    if value > 1:
        out[value] = out.get(value, 0) + 1
    return out


def _power_ratio(a: int, b: int) -> Fraction | None:
    """
    Ratio k_b/k_a with a^{k_a} = b^{k_b}, or None when a, b are multiplicatively independent.
    满足 a^{k_a} = b^{k_b} 的比值 k_b/k_a；乘法独立时返回 None。
    """
    fa, fb = _factorize(a), _factorize(b)
    if set(fa) != set(fb):
        return None
    ratios = {Fraction(fa[p], fb[p]) for p in fa}
    return ratios.pop() if len(ratios) == 1 else None


def same_grid_reduction(a: CarpetSpec, b: CarpetSpec, *, config: FractalConfig | None = None) -> GridReduction:
    """
    Minimal (k_a, k_b) with m_a^k_a = m_b^k_b and n_a^k_a = n_b^k_b.
    满足 m_a^k_a = m_b^k_b 且 n_a^k_a = n_b^k_b 的最小 (k_a, k_b)。

    Args:
        a: First carpet.
        a: 第一个载毯。
        b: Second carpet.
        b: 第二个载毯。
        config: Numerical configuration (exponent_bound).
        config: 数值配置（exponent_bound）。

    Returns:
        GridReduction: Exponents or absent, with the bound flag.
        GridReduction: 指数或不存在，以及上限标记。

    Raises:
        DomainError: The exponent pair fails the exact integer check.
        DomainError: 指数对未通过精确整数校验。
    """
    cfg = config or resolve_config()
    rm = _power_ratio(a.m, b.m)
    rn = _power_ratio(a.n, b.n)
    if rm is None or rn is None or rm != rn:
        return GridReduction(exponents=None)
    k_a, k_b = rm.denominator, rm.numerator
    if max(k_a, k_b) > cfg.exponent_bound:
        logger.debug("same-grid exponents %s exceed bound %d", (k_a, k_b), cfg.exponent_bound)
        return GridReduction(exponents=None, bound_reached=True)
    if a.m**k_a != b.m**k_b or a.n**k_a != b.n**k_b:
        raise DomainError(
            message=f"Exponents {(k_a, k_b)} fail the exact grid check / 指数未通过精确网格校验",
            details={"k_a": k_a, "k_b": k_b, "a": [a.m, a.n], "b": [b.m, b.n]},
            error_code="grid_confirmation",
        )
    return GridReduction(exponents=(k_a, k_b))


@lru_cache(maxsize=4096)
def gamma_floor(m: int, n: int, k: int) -> int:
    """
    Exact floor(gamma * k): the largest j with m^j <= n^k.
    精确的 floor(gamma * k)：满足 m^j <= n^k 的最大 j。

    Args:
        m: Horizontal base.
        m: 水平基数。
        n: Vertical base.
        n: 垂直基数。
        k: Level.
        k: 层级。

    Returns:
        int: floor(gamma * k).
        int: floor(gamma * k)。
    """
    j = int(k * math.log(n) / math.log(m))
    target = n**k
    while m ** (j + 1) <= target:
        j += 1
    while j > 0 and m**j > target:
        j -= 1
    return j


def iterate_profile(p: ColumnProfile, k: int, *, config: FractalConfig | None = None) -> ColumnProfile:
    """
    Column profile of the k-fold iterate without materializing its cells.
    不展开单元格直接计算 k 重迭代的列统计。

    Columns of the iterate are column words of length k; each carries the product of its counts.
    迭代后的列对应长度为 k 的列词，其计数为各列计数之积。

    Args:
        p: Column profile.
        p: 列统计。
        k: Number of compositions (>= 1).
        k: 复合次数（>= 1）。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        ColumnProfile: Profile on the m^k x n^k grid.
        ColumnProfile: m^k x n^k 网格上的列统计。
    """
    cfg = config or resolve_config()
    if k < 1 or p.M**k > cfg.enumeration_budget:
        raise CapacityError(
            message=f"Cannot iterate profile k={k} within budget / 无法在预算内迭代列统计",
            details={"k": k, "columns": p.M**k, "budget": cfg.enumeration_budget},
            error_code="capacity",
        )
    counts = [math.prod(word) for word in product(p.counts, repeat=k)]
    return ColumnProfile(m=p.m**k, n=p.n**k, counts=tuple(counts))
