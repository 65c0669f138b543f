"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: combinatorial_oracle.py
@DateTime: 2026-10-17
@Docs: Brute-force and exact-combinatorial cross-checks of the carpet formulas.
载毯公式的暴力枚举与精确组合交叉校验。

All costs and counts are returned as natural logarithms.
所有代价与计数均以自然对数返回。

Approximate squares / 近似正方形:
        A level-k square is a map word (i_1, ..., i_k) plus the column window (j_(k+1), ..., j_(gamma(k)))
        with gamma(k) = floor(gamma * k); only the window matters for covering costs.
        第 k 层近似正方形由映射词 (i_1, ..., i_k) 与列窗口 (j_(k+1), ..., j_(gamma(k))) 确定，
        其中 gamma(k) = floor(gamma * k)；覆盖代价只依赖于窗口。
"""

import logging
import math
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import product

import numpy as np
from scipy.optimize import bisect, minimize_scalar
from scipy.special import gammaln, logsumexp

from fractal_intdim.carpet_model import ColumnProfile, gamma_floor
from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import CapacityError, DomainError, RootSearchError
from fractal_intdim.rate_function import RateFn, rate_I, t_of_s

logger = logging.getLogger(__name__)


def _check_budget(size: int, budget: int, what: str) -> None:
    if size > budget:
        raise CapacityError(
            message=f"{what}: {size} exceeds budget {budget} / {what} 超出预算",
            details={"size": size, "budget": budget, "what": what},
            error_code="capacity",
        )


@dataclass(frozen=True, slots=True)
class SymbolicWindow:
    """
    Column window of a level-k approximate square.
    第 k 层近似正方形的列窗口。

    Attributes:
        level: k.
        level: 层级 k。
        window: Column indices (0-based into profile.counts) at positions k+1 .. gamma(k).
        window: 位置 k+1 .. gamma(k) 上的列索引（从 0 开始，对应 profile.counts）。
        M: Alphabet size.
        M: 字母表大小。
    """

    level: int
    window: tuple[int, ...]
    M: int

    @classmethod
    def from_code(cls, p: ColumnProfile, level: int, code: int) -> "SymbolicWindow":
        """
        Decode a base-M integer (most significant digit first).
        解码 base-M 整数（高位在前）。
        """
        width = gamma_floor(p.m, p.n, level) - level
        digits = []
        for _ in range(width):
            code, d = divmod(code, p.M)
            digits.append(d)
        if code:
            raise DomainError(message="Window code too large / 窗口编码过大", error_code="bad_window")
        return cls(level=level, window=tuple(reversed(digits)), M=p.M)

    @property
    def code(self) -> int:
        """Base-M integer of the window / 窗口的 base-M 整数编码。"""
        out = 0
        for d in self.window:
            out = out * self.M + d
        return out

    def validate(self, p: ColumnProfile) -> None:
        """Check the window length gamma(k) - k / 检查窗口长度为 gamma(k) - k。"""
        width = gamma_floor(p.m, p.n, self.level) - self.level
        if len(self.window) != width or any(not 0 <= d < p.M for d in self.window):
            raise DomainError(
                message=f"Window of level {self.level} must have {width} digits in [0, {p.M}) / 窗口长度或取值错误",
                error_code="bad_window",
            )


def box_count(p: ColumnProfile, K: int) -> float:
    """
    log #B_K = K log N + (floor(gamma K) - K) log M.
    log #B_K = K log N + (floor(gamma K) - K) log M。
    """
    if K < 1:
        raise DomainError(message=f"K must be >= 1, got {K} / K 必须 >= 1", error_code="bad_level")
    return K * math.log(p.N) + (gamma_floor(p.m, p.n, K) - K) * math.log(p.M)


def _check_word(p: ColumnProfile, word: Sequence[int]) -> None:
    if any(not 0 <= j < p.M for j in word):
        raise DomainError(
            message=f"Column word must use indices in [0, {p.M}) / 列词索引须位于 [0, {p.M})",
            details={"word": list(word)},
            error_code="bad_word",
        )


def psi_cost(p: ColumnProfile, word: Sequence[int], k: int, s: float) -> float:
    """
    log psi_(word|k)(s) = k gamma log M - s k log n + sum_(l <= k) log N_(word_l).
    log psi_(word|k)(s) = k gamma log M - s k log n + sum_(l <= k) log N_(word_l)。

    Args:
        p: Column profile.
        p: 列统计。
        word: Column indices, 0-based into profile.counts.
        word: 列索引（从 0 开始，对应 profile.counts）。
        k: Prefix length in [0, len(word)].
        k: 前缀长度，位于 [0, len(word)]。
        s: Exponent.
        s: 指数。

    Returns:
        float: Log cost; 0 for k = 0.
        float: 对数代价；k = 0 时为 0。
    """
    _check_word(p, word)
    if not 0 <= k <= len(word):
        raise DomainError(message=f"k={k} outside [0, {len(word)}] / k 超出范围", error_code="bad_prefix")
    if k == 0:
        return 0.0
    logs = p.log_counts
    return k * (p.gamma * math.log(p.M) - s * math.log(p.n)) + float(sum(logs[j] for j in word[:k]))


def pressure_Psi(p: ColumnProfile, J: int, s: float, *, config: FractalConfig | None = None) -> float:
    """
    log Psi_J(s), the sum over column words of length J of min_k psi_(word|k)(s).
    log Psi_J(s)：长度为 J 的列词上 min_k psi_(word|k)(s) 之和。

    Words are enumerated level by level over column groups, carrying the running prefix minimum;
    each group letter is weighted by its multiplicity R_i.
    按层枚举列分组上的词并携带前缀最小值；每个分组字母以其重数 R_i 加权。

    Args:
        p: Column profile.
        p: 列统计。
        J: Word length (>= 1).
        J: 词长（>= 1）。
        s: Exponent.
        s: 指数。
        config: Numerical configuration (enumeration_budget).
        config: 数值配置（enumeration_budget）。

    Returns:
        float: log Psi_J(s).
        float: log Psi_J(s)。
    """
    cfg = config or resolve_config()
    if J < 1:
        raise DomainError(message=f"J must be >= 1, got {J} / J 必须 >= 1", error_code="bad_level")
    _check_budget(p.M0**J, cfg.enumeration_budget, "pressure words")
    step = p.gamma * math.log(p.M) - s * math.log(p.n) + p.group_logs
    log_r = np.log(p.group_mult)
    value = np.zeros(1)
    running = np.zeros(1)
    weight = np.zeros(1)
    for _ in range(J):
        value = (value[:, None] + step[None, :]).reshape(-1)
        running = np.minimum(np.repeat(running, p.M0), value)
        weight = (weight[:, None] + log_r[None, :]).reshape(-1)
    logger.debug("pressure_Psi J=%d enumerated %d grouped words", J, value.size)
    return float(logsumexp(running + weight))


def pressure_rate(p: ColumnProfile, s: float, *, config: FractalConfig | None = None) -> float:
    """
    log M - I(t) with t = (s - log M/log m) log n clamped to [t_low, t_high].
    log M - I(t)，其中 t = (s - log M/log m) log n 截断到 [t_low, t_high]。
    """
    rf = RateFn(profile=p, config=config or resolve_config())
    t = min(max(t_of_s(p, s), p.t_low), p.t_high)
    return math.log(p.M) - rate_I(rf, t)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All (c_1, ..., c_parts) of non-negative integers summing to total / 所有和为 total 的非负整数组。"""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def _type_log_sum(p: ColumnProfile, counts: Sequence[int]) -> float:
    """sum_i c_i log N_i in group order; shared by both counters / 两个计数器共用的求和。"""
    total = 0.0
    for c, (n_i, _) in zip(counts, p.groups, strict=True):
        total += c * math.log(n_i)
    return total


def count_below(p: ColumnProfile, J: int, t: float, *, config: FractalConfig | None = None) -> float:
    """
    log #{map words of length J whose column average of log N is <= t}, by exact type sums.
    长度为 J、列平均 log N 不超过 t 的映射词个数的对数（精确类型求和）。

    Args:
        p: Column profile.
        p: 列统计。
        J: Word length (>= 1).
        J: 词长（>= 1）。
        t: Threshold.
        t: 阈值。
        config: Numerical configuration (enumeration_budget bounds the type count).
        config: 数值配置（enumeration_budget 限制类型个数）。

    Returns:
        float: Log count, or -inf when no word qualifies.
        float: 对数计数；无满足条件的词时为 -inf。
    """
    cfg = config or resolve_config()
    if J < 1:
        raise DomainError(message=f"J must be >= 1, got {J} / J 必须 >= 1", error_code="bad_level")
    _check_budget(math.comb(J + p.M0 - 1, p.M0 - 1), cfg.enumeration_budget, "type lattice")
    total = 0
    for counts in _compositions(J, p.M0):
        if _type_log_sum(p, counts) > J * t:
            continue
        multinom = math.factorial(J)
        weight = 1
        for c, (n_i, r_i) in zip(counts, p.groups, strict=True):
            multinom //= math.factorial(c)
            weight *= (r_i * n_i) ** c
        total += multinom * weight
    return math.log(total) if total else -math.inf


def count_below_bruteforce(p: ColumnProfile, J: int, t: float, *, config: FractalConfig | None = None) -> float:
    """
    The same count by direct enumeration of all M^J column words.
    通过直接枚举全部 M^J 个列词得到同一计数。
    """
    cfg = config or resolve_config()
    _check_budget(p.M**J, cfg.enumeration_budget, "column words")
    group_of = {}
    for gi, (n_i, _) in enumerate(p.groups):
        for col, c in enumerate(p.counts):
            if c == n_i:
                group_of[col] = gi
    total = 0
    for word in product(range(p.M), repeat=J):
        counts = [0] * p.M0
        weight = 1
        for col in word:
            counts[group_of[col]] += 1
            weight *= p.counts[col]
        if _type_log_sum(p, counts) <= J * t:
            total += weight
    return math.log(total) if total else -math.inf


def count_rate(p: ColumnProfile, t: float, *, config: FractalConfig | None = None) -> float:
    """
    Growth rate min(t, t_high) + log M - I(min(t, t_high)) of count_below, for t >= t_low.
    count_below 的增长率 min(t, t_high) + log M - I(min(t, t_high))（t >= t_low）。
    """
    rf = RateFn(profile=p, config=config or resolve_config())
    u = min(t, p.t_high)
    return u + math.log(p.M) - rate_I(rf, u)


def _two_scale_parts(p: ColumnProfile, theta: float, K: int) -> tuple[int, int, int, int]:
    """(K', gamma(K), prefix length P, free window length) / 两尺度覆盖的分解参数。"""
    k_fine = math.floor(K / theta)
    g_k = gamma_floor(p.m, p.n, K)
    prefix = min(k_fine, g_k) - K
    return k_fine, g_k, prefix, (g_k - K) - prefix


def two_scale_cover(
    p: ColumnProfile, theta: float, K: int, s: float, *, config: FractalConfig | None = None
) -> float:
    """
    log cost of the best cover using only levels K and floor(K/theta), square by square.
    仅用第 K 层与第 floor(K/theta) 层、逐个正方形取最优的覆盖代价（对数）。

    Each level-K square either stays (n^(-Ks)) or is split into its level-K' children; the child count
    depends on the window only through the log-count sum of its first min(K', gamma(K)) - K columns,
    so squares are grouped by that prefix type.
    每个第 K 层正方形或保留（n^(-Ks)）或拆分为第 K' 层子正方形；子正方形个数只通过窗口前
    min(K', gamma(K)) - K 列的对数计数和依赖窗口，因此按该前缀类型分组。

    Args:
        p: Column profile.
        p: 列统计。
        theta: theta in (0, 1].
        theta: theta，位于 (0, 1]。
        K: Coarse level (>= 1).
        K: 粗层级（>= 1）。
        s: Exponent.
        s: 指数。
        config: Numerical configuration (enumeration_budget bounds the prefix types).
        config: 数值配置（enumeration_budget 限制前缀类型数）。

    Returns:
        float: log of the total s-cost.
        float: 总 s 代价的对数。
    """
    cfg = config or resolve_config()
    if not 0.0 < theta <= 1.0 or K < 1:
        raise DomainError(message=f"Need theta in (0, 1] and K >= 1, got ({theta}, {K}) / 参数无效", error_code="bad_level")
    k_fine, g_k, prefix, free = _two_scale_parts(p, theta, K)
    _check_budget(math.comb(prefix + p.M0 - 1, p.M0 - 1), cfg.enumeration_budget, "prefix types")
    log_n, log_m_cols, log_big_n = math.log(p.n), math.log(p.M), math.log(p.N)
    stop = -K * s * log_n
    extra = max(0, k_fine - g_k) * log_big_n
    extra += (gamma_floor(p.m, p.n, k_fine) - max(k_fine, g_k)) * log_m_cols
    extra -= k_fine * s * log_n
    types = np.asarray(list(_compositions(prefix, p.M0)), dtype=float).reshape(-1, p.M0)
    log_multinom = gammaln(prefix + 1) - gammaln(types + 1).sum(axis=1)
    log_weight = types @ np.log(p.group_mult)
    split = types @ p.group_logs + extra
    per_type = log_multinom + log_weight + np.minimum(stop, split)
    return K * log_big_n + free * log_m_cols + float(logsumexp(per_type))


@dataclass(frozen=True, slots=True)
class DpCover:
    """
    Optimal approximate-square cover found by the level-wise dynamic program.
    按层动态规划得到的最优近似正方形覆盖。

    Attributes:
        log_cost: log of the minimal s-cost.
        log_cost: 最小 s 代价的对数。
        K: Coarsest level.
        K: 最粗层级。
        k_fine: Finest level floor(K/theta).
        k_fine: 最细层级 floor(K/theta)。
        level_mass: Share of the uniform map measure covered at each level (sums to 1).
        level_mass: 各层覆盖的均匀映射测度份额（总和为 1）。
        stops: Per-level boolean masks over window codes: True when the square is kept.
        stops: 各层按窗口编码的布尔掩码：True 表示保留该正方形。
    """

    log_cost: float
    K: int
    k_fine: int
    level_mass: dict[int, float]
    stops: dict[int, np.ndarray] = field(repr=False)

    def decision(self, sq: SymbolicWindow) -> bool:
        """True when the cover keeps this square rather than splitting it / 覆盖保留该正方形时为 True。"""
        if not self.K <= sq.level <= self.k_fine:
            raise DomainError(message=f"Level {sq.level} outside the cover range / 层级超出覆盖范围", error_code="bad_level")
        return bool(self.stops[sq.level][sq.code])


def optimal_cover_dp(
    p: ColumnProfile, theta: float, K: int, s: float, *, config: FractalConfig | None = None
) -> DpCover:
    """
    Exact minimal s-cost over covers by approximate squares with levels in [K, floor(K/theta)].
    层级位于 [K, floor(K/theta)] 的近似正方形覆盖的精确最小 s 代价。

    C(k, w) = min(n^(-ks), sum over children of C(k+1, child)), keyed by (level, base-M window code);
    each level is solved for all window codes at once.
    C(k, w) = min(n^(-ks), 子正方形 C(k+1, child) 之和)，以 (层级, base-M 窗口编码) 为键；每层一次性求解所有窗口编码。

    Args:
        p: Column profile.
        p: 列统计。
        theta: theta in (0, 1].
        theta: theta，位于 (0, 1]。
        K: Coarsest level (>= 1).
        K: 最粗层级（>= 1）。
        s: Exponent.
        s: 指数。
        config: Numerical configuration (dp_state_budget).
        config: 数值配置（dp_state_budget）。

    Returns:
        DpCover: Cost and the cover structure.
        DpCover: 代价与覆盖结构。
    """
    cfg = config or resolve_config()
    if not 0.0 < theta <= 1.0 or K < 1:
        raise DomainError(message=f"Need theta in (0, 1] and K >= 1, got ({theta}, {K}) / 参数无效", error_code="bad_level")
    k_fine = math.floor(K / theta)
    widths = {k: gamma_floor(p.m, p.n, k) - k for k in range(K, k_fine + 2)}
    _check_budget(max(p.M ** (widths[k] + 1) for k in range(K, k_fine + 1)), cfg.dp_state_budget, "window states")
    log_n = math.log(p.n)
    logs = p.log_counts
    cost = np.full(p.M ** widths[k_fine], -k_fine * s * log_n)
    stops: dict[int, np.ndarray] = {k_fine: np.ones(cost.size, dtype=bool)}
    child_share: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    for k in range(k_fine - 1, K - 1, -1):
        child_width = widths[k + 1]
        extended = np.arange(p.M ** (child_width + 1)).reshape(p.M ** widths[k], -1)
        first, child = np.divmod(extended, p.M**child_width)
        split = logsumexp(logs[first] + cost[child], axis=1)
        keep = -k * s * log_n
        stops[k] = keep <= split
        child_share[k] = (child, stops[k])
        cost = np.minimum(keep, split)
    log_cost = K * math.log(p.N) + float(logsumexp(cost))
    level_mass = _level_mass(p, K, k_fine, widths, child_share)
    return DpCover(log_cost=log_cost, K=K, k_fine=k_fine, level_mass=level_mass, stops=stops)


def _level_mass(
    p: ColumnProfile,
    K: int,
    k_fine: int,
    widths: dict[int, int],
    child_share: dict[int, tuple[np.ndarray, np.ndarray]],
) -> dict[int, float]:
    """
    Push the uniform map measure down the chosen cut and record where it stops.
    将均匀映射测度沿选定的切分向下传递，并记录其停留的层级。
    """
    col_mass = np.asarray(p.counts, dtype=float) / p.N

    def window_mass(width: int) -> np.ndarray:
        mass = np.ones(1)
        for _ in range(width):
            mass = (mass[:, None] * col_mass[None, :]).reshape(-1)
        return mass

    mass = window_mass(widths[K])
    out: dict[int, float] = {}
    for k in range(K, k_fine):
        child, keep = child_share[k]
        out[k] = float(mass[keep].sum())
        # Child share inside a parent: new columns weighted by N_j/N, first column already counted
        new_cols = widths[k + 1] + 1 - widths[k]
        weights = window_mass(new_cols)
        moving = np.where(keep, 0.0, mass)[:, None] * weights[None, :]
        nxt = np.zeros(p.M ** widths[k + 1])
        np.add.at(nxt, child.reshape(-1), moving.reshape(-1))
        mass = nxt
    out[k_fine] = float(mass.sum())
    return out


def critical_exponent(cost_fn: Callable[[float], float], lo: float, hi: float, *, tol: float = 1e-9) -> float:
    """
    s in [lo, hi] where a decreasing log-cost crosses 0.
    递减对数代价在 [lo, hi] 中穿过 0 的 s。

    Returns:
        float: Crossing point; lo (hi) when the cost is already <= 0 (>= 0) there.
        float: 穿越点；若在 lo 处已 <= 0 返回 lo，在 hi 处仍 >= 0 返回 hi。
    """
    f_lo, f_hi = cost_fn(lo), cost_fn(hi)
    if f_lo <= 0.0:
        return lo
    if f_hi >= 0.0:
        return hi
    try:
        return float(bisect(cost_fn, lo, hi, xtol=tol, maxiter=200))
    except (RuntimeError, ValueError) as exc:
        raise RootSearchError(
            message=f"Critical exponent search failed on [{lo}, {hi}] / 临界指数搜索失败",
            details={"bracket": [lo, hi], "error": str(exc)},
            error_code="critical_exponent",
        ) from exc


def two_scale_exponent(p: ColumnProfile, theta: float, *, config: FractalConfig | None = None) -> float:
    """
    Large-K critical exponent of two-scale covers.
    两尺度覆盖在 K 很大时的临界指数。

    Per unit of K the log cost is log N + (gamma - kappa) log M
    + min_(c in [0, 1]) [(kappa - 1) log sum_j N_j^c + A + c (B - A)] with kappa = min(1/theta, gamma),
    A the keep cost and B the split cost without the prefix.
    每单位 K 的对数代价为上式，其中 kappa = min(1/theta, gamma)，A 为保留代价，B 为不含前缀的拆分代价。

    Args:
        p: Column profile.
        p: 列统计。
        theta: theta in (0, 1].
        theta: theta，位于 (0, 1]。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        float: Root of the exponent in s; equals the intermediate dimension when theta >= 1/gamma.
        float: 指数关于 s 的根；theta >= 1/gamma 时等于中间维数。
    """
    cfg = config or resolve_config()
    if not 0.0 < theta <= 1.0:
        raise DomainError(message=f"theta={theta} outside (0, 1] / theta 超出 (0, 1]", error_code="theta_domain")
    kappa = min(1.0 / theta, p.gamma)
    log_n, log_m_cols, log_big_n = math.log(p.n), math.log(p.M), math.log(p.N)
    a, r = p.group_logs, p.group_mult

    def exponent(s: float) -> float:
        keep = -s * log_n
        split = (
            (1.0 / theta - kappa) * log_big_n
            + (p.gamma / theta - max(1.0 / theta, p.gamma)) * log_m_cols
            - s / theta * log_n
        )

        def inner(c: float) -> float:
            return (kappa - 1.0) * float(logsumexp(c * a, b=r)) + keep + c * (split - keep)

        res = minimize_scalar(inner, bounds=(0.0, 1.0), method="bounded", options={"xatol": 1e-12})
        best = min(float(res.fun), inner(0.0), inner(1.0))
        return log_big_n + (p.gamma - kappa) * log_m_cols + best

    upper = math.log(p.N) / log_n + (1.0 - 1.0 / p.gamma) * log_m_cols / math.log(p.m)
    return critical_exponent(exponent, 0.0, upper, tol=cfg.root_tol)


@dataclass(frozen=True, slots=True)
class OracleReport:
    """
    One oracle evaluation against its analytic reference.
    一次预言机计算及其解析参考值。

    Counting oracles (box, psi, count) carry a per-level reference_rate; cover oracles (two-scale, dp)
    carry the reference exponent dim_theta instead.
    计数类预言机（box、psi、count）携带每层参考速率；覆盖类预言机（two-scale、dp）携带参考指数 dim_theta。

    Attributes:
        kind: box, psi, count, two-scale or dp.
        kind: box、psi、count、two-scale 或 dp。
        level: J for psi and count, K otherwise.
        level: psi 与 count 为 J，其余为 K。
        log_value: Oracle log value (log count or log cost).
        log_value: 预言机对数值（对数计数或对数代价）。
        reference_rate: Analytic per-level rate.
        reference_rate: 解析的每层速率。
        s: Exponent.
        s: 指数。
        t: Threshold of the count oracle.
        t: 计数预言机的阈值。
        theta: theta for cover oracles.
        theta: 覆盖类预言机的 theta。
        critical_s: Crossing exponent when scanned.
        critical_s: 扫描得到的穿越指数。
        reference_s: dim_theta for cover oracles.
        reference_s: 覆盖类预言机的 dim_theta。
    """

    kind: str
    level: int
    log_value: float
    reference_rate: float | None = None
    s: float | None = None
    t: float | None = None
    theta: float | None = None
    critical_s: float | None = None
    reference_s: float | None = None

    @property
    def per_scale(self) -> bool:
        """True when level is the scale count J / level 为尺度数 J 时为 True。"""
        return self.kind in ("psi", "count")

    @property
    def is_count(self) -> bool:
        """True when log_value is a log count rather than a log cost / log_value 为对数计数时为 True。"""
        return self.kind in ("box", "count")

    @property
    def gap(self) -> float | None:
        if self.reference_rate is None:
            return None
        return abs(self.log_value / self.level - self.reference_rate)
