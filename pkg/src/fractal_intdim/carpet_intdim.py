"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: carpet_intdim.py
@DateTime: 2026-10-17
@Docs: Intermediate dimensions of Bedford-McMullen carpets.
Bedford-McMullen 载毯的中间维数。

dim_theta is the unique root s of G(theta, s) = 0 where, with L the window index of theta,
dim_theta 为 G(theta, s) = 0 的唯一根，其中 L 为 theta 所在窗口序号：

    G = gamma^L theta log N - (gamma^L theta - 1) t_L(s)
        + gamma (1 - gamma^(L-1) theta) (log M - I(t_L(s))) - s log n

and t_1(s) = (s - log M/log m) log n, t_(l+1) = t_1(s) + gamma I(t_l).
"""

import logging
import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Literal

import numpy as np
from scipy.optimize import bisect
from scipy.special import logsumexp

from fractal_intdim.carpet_model import ColumnProfile
from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import DomainError, IterateEscapeError, RootSearchError
from fractal_intdim.rate_function import RateFn, lambda_of_t, rate_I, t_of_s

logger = logging.getLogger(__name__)

RootMethod = Literal["bisect", "scan"]


@lru_cache(maxsize=64)
def rate_fn_for(p: ColumnProfile, config: FractalConfig) -> RateFn:
    """
    Shared rate function per (profile, config), so lambda inversions are cached across calls.
    按 (列统计, 配置) 共享速率函数，使 lambda 反演结果跨调用复用。
    """
    return RateFn(profile=p, config=config)


def dim_hausdorff(p: ColumnProfile) -> float:
    """
    Hausdorff dimension (1/log m) log(sum_j N_j^(log m/log n)).
    Hausdorff 维数 (1/log m) log(sum_j N_j^(log m/log n))。
    """
    return float(logsumexp(p.group_logs / p.gamma, b=p.group_mult)) / math.log(p.m)


def dim_box(p: ColumnProfile) -> float:
    """
    Box dimension log N/log n + (1 - log m/log n) log M/log m.
    盒维数 log N/log n + (1 - log m/log n) log M/log m。
    """
    return math.log(p.N) / math.log(p.n) + (1.0 - 1.0 / p.gamma) * math.log(p.M) / math.log(p.m)


def snap_theta(p: ColumnProfile, theta: float, *, config: FractalConfig | None = None) -> tuple[float, int | None]:
    """
    Snap theta to gamma^-k when within snap_tol.
    theta 与 gamma^-k 的距离不超过 snap_tol 时吸附到该幂次。

    Returns:
        tuple[float, int | None]: (theta, k) with k the exponent when snapped, else None.
        tuple[float, int | None]: (theta, k)；吸附时 k 为指数，否则为 None。
    """
    cfg = config or resolve_config()
    k = round(-math.log(theta) / math.log(p.gamma))
    power = p.gamma ** (-k)
    if k >= 0 and abs(theta - power) <= cfg.snap_tol:
        return power, k
    return theta, None


def _check_theta(theta: float, cfg: FractalConfig, *, open_right: bool = False) -> None:
    upper_ok = theta < 1.0 if open_right else theta <= 1.0
    if not (theta > 0.0 and upper_ok):
        raise DomainError(
            message=f"theta={theta} outside (0, 1] / theta 超出 (0, 1]",
            details={"theta": theta},
            error_code="theta_domain",
        )
    if theta < cfg.theta_floor:
        raise DomainError(
            message=f"theta={theta} below floor {cfg.theta_floor} / theta 低于下限",
            details={"theta": theta, "floor": cfg.theta_floor},
            error_code="theta_floor",
        )


def window_index(p: ColumnProfile, theta: float, *, config: FractalConfig | None = None) -> int:
    """
    Window index L with gamma^-L < theta <= gamma^-(L-1).
    满足 gamma^-L < theta <= gamma^-(L-1) 的窗口序号 L。

    Args:
        p: Column profile.
        p: 列统计。
        theta: theta in (0, 1].
        theta: theta，位于 (0, 1]。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        int: L >= 1.
        int: L >= 1。
    """
    cfg = config or resolve_config()
    if not 0.0 < theta <= 1.0:
        raise DomainError(
            message=f"theta={theta} outside (0, 1] / theta 超出 (0, 1]",
            details={"theta": theta},
            error_code="theta_domain",
        )
    snapped, k = snap_theta(p, theta, config=cfg)
    if k is not None:
        return k + 1
    return 1 + math.floor(-math.log(snapped) / math.log(p.gamma))


def t_sequence(p: ColumnProfile, s: float, L: int, *, config: FractalConfig | None = None) -> list[float]:
    """
    The orbit t_1(s), ..., t_L(s) of T_s.
    T_s 的轨道 t_1(s), ..., t_L(s)。

    Args:
        p: Column profile.
        p: 列统计。
        s: Exponent.
        s: 指数。
        L: Orbit length (>= 1).
        L: 轨道长度（>= 1）。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        list[float]: [t_1, ..., t_L].
        list[float]: [t_1, ..., t_L]。

    Raises:
        IterateEscapeError: An iterate left [t_low, t_max); details carry the direction.
        IterateEscapeError: 迭代值离开 [t_low, t_max)；details 中包含方向。
    """
    cfg = config or resolve_config()
    rf = rate_fn_for(p, cfg)
    t1 = t_of_s(p, s)
    out = []
    t = t1
    for ell in range(1, L + 1):
        if t < p.t_low - cfg.lambda_tol or t >= p.t_max:
            raise IterateEscapeError(
                message=f"t_{ell}({s}) = {t} left [t_low, t_max) / 迭代值离开定义域",
                details={"s": s, "ell": ell, "t": t, "direction": "below" if t < p.t_low else "above"},
                error_code="iterate_escape",
            )
        t = max(t, p.t_low)
        out.append(t)
        if ell < L:
            t = t1 + p.gamma * rate_I(rf, t)
    return out


def main_equation_G(p: ColumnProfile, theta: float, s: float, *, config: FractalConfig | None = None) -> float:
    """
    Left-hand side G(theta, s) of the dimension equation; strictly decreasing in s.
    维数方程左端 G(theta, s)，关于 s 严格递减。
    """
    cfg = config or resolve_config()
    L = window_index(p, theta, config=cfg)
    theta, _ = snap_theta(p, theta, config=cfg)
    return _g_value(p, theta, s, L, cfg)


def _g_value(p: ColumnProfile, theta: float, s: float, L: int, cfg: FractalConfig) -> float:
    rf = rate_fn_for(p, cfg)
    t_L = t_sequence(p, s, L, config=cfg)[-1]
    g_l = p.gamma**L * theta
    g_l1 = p.gamma ** (L - 1) * theta
    return (
        g_l * math.log(p.N)
        - (g_l - 1.0) * t_L
        + p.gamma * (1.0 - g_l1) * (math.log(p.M) - rate_I(rf, t_L))
        - s * math.log(p.n)
    )


def reduced_boundary_equation(p: ColumnProfile, L: int, s: float, *, config: FractalConfig | None = None) -> float:
    """
    Boundary form at theta = gamma^-(L-1), L >= 2: dim_B - (1/log m)(1 - 1/gamma) I(t_(L-1)(s)) - s.
    theta = gamma^-(L-1)（L >= 2）处的边界形式。
    """
    cfg = config or resolve_config()
    if L < 2:
        raise DomainError(message=f"Boundary form needs L >= 2, got {L} / 边界形式要求 L >= 2", error_code="bad_window")
    rf = rate_fn_for(p, cfg)
    t_prev = t_sequence(p, s, L - 1, config=cfg)[-1]
    return dim_box(p) - (1.0 - 1.0 / p.gamma) * rate_I(rf, t_prev) / math.log(p.m) - s


def _guarded(fn: Any) -> Any:
    """
    Wrap an s-function so escaping iterates map to +-inf with the sign of the escape.
    包装 s 的函数，使迭代逃逸按方向映射为正负无穷。
    """

    def wrapped(s: float) -> float:
        try:
            return fn(s)
        except IterateEscapeError as exc:
            return math.inf if exc.details["direction"] == "below" else -math.inf

    return wrapped


def _solve_decreasing(
    f: Any, lo: float, hi: float, floor_value: float, *, method: RootMethod, cfg: FractalConfig
) -> float:
    """
    Root of a decreasing function on [lo, hi] with the endpoint conventions of the dimension equation.
    在 [lo, hi] 上求递减函数的根，并采用维数方程的端点约定。
    """
    g = _guarded(f)
    f_hi = g(hi)
    if f_hi >= 0:
        return hi
    f_lo = g(lo)
    if f_lo <= 0:
        return floor_value
    if method == "scan":
        grid = np.linspace(lo, hi, cfg.scan_points)
        prev = grid[0]
        for s in grid[1:]:
            if g(float(s)) <= 0:
                lo, hi = float(prev), float(s)
                break
            prev = s
        logger.debug("scan bracket [%.15g, %.15g]", lo, hi)
    elif method != "bisect":
        raise DomainError(message=f"Unknown root method {method!r} / 未知求根方法", error_code="bad_method")
    try:
        return float(bisect(g, lo, hi, xtol=cfg.root_tol, maxiter=cfg.max_bisect_iter))
    except (RuntimeError, ValueError) as exc:
        raise RootSearchError(
            message=f"Bisection failed on [{lo}, {hi}] / 二分求根失败",
            details={"bracket": [lo, hi], "error": str(exc)},
            error_code="root_search",
        ) from exc


def intermediate_dim(
    p: ColumnProfile, theta: float, *, method: RootMethod = "bisect", config: FractalConfig | None = None
) -> float:
    """
    Intermediate dimension dim_theta of the carpet.
    载毯的中间维数 dim_theta。

    Args:
        p: Column profile.
        p: 列统计。
        theta: theta in (0, 1].
        theta: theta，位于 (0, 1]。
        method: "bisect" or "scan" (sign-change scan then bisection, a cross-check).
        method: "bisect" 或 "scan"（先扫描符号变化再二分，用于交叉校验）。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        float: Root of G(theta, .) in [dim_H, dim_B].
        float: G(theta, .) 在 [dim_H, dim_B] 中的根。
    """
    cfg = config or resolve_config()
    _check_theta(theta, cfg)
    d_h, d_b = dim_hausdorff(p), dim_box(p)
    if p.uniform_fibres:
        return d_h
    L = window_index(p, theta, config=cfg)
    theta, _ = snap_theta(p, theta, config=cfg)
    if theta == 1.0:
        return d_b
    return _solve_decreasing(
        lambda s: _g_value(p, theta, s, L, cfg), d_h + 1e-14, d_b, d_h, method=method, cfg=cfg
    )


def _sprime(p: ColumnProfile, theta: float, s: float, L: int, cfg: FractalConfig) -> float:
    """
    ds/dtheta from the window-L equation by implicit differentiation.
    由第 L 窗口方程隐函数求导得到 ds/dtheta。
    """
    rf = rate_fn_for(p, cfg)
    ts = t_sequence(p, s, L, config=cfg)
    # A_1 = 1, A_(l+1) = 1 + gamma I'(t_l) A_l / 递推
    acc = 1.0
    for t in ts[:-1]:
        acc = 1.0 + p.gamma * lambda_of_t(rf, t) * acc
    t_L = ts[-1]
    g_l = p.gamma**L
    num = g_l / math.log(p.n) * (math.log(p.N) - t_L - math.log(p.M) + rate_I(rf, t_L))
    den = 1.0 + (g_l * theta - 1.0 + p.gamma * (1.0 - p.gamma ** (L - 1) * theta) * lambda_of_t(rf, t_L)) * acc
    return num / den


def dim_derivatives(p: ColumnProfile, theta: float, *, config: FractalConfig | None = None) -> tuple[float, float]:
    """
    One-sided derivatives of theta -> dim_theta.
    theta -> dim_theta 的单侧导数。

    At theta = gamma^-L the left derivative uses window L+1 and the right one window L;
    at theta = 1 both entries are the left derivative.
    在 theta = gamma^-L 处左导数取第 L+1 窗口、右导数取第 L 窗口；theta = 1 时两者均为左导数。

    Args:
        p: Column profile.
        p: 列统计。
        theta: theta in (0, 1].
        theta: theta，位于 (0, 1]。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        tuple[float, float]: (d_minus, d_plus).
        tuple[float, float]: (左导数, 右导数)。
    """
    cfg = config or resolve_config()
    _check_theta(theta, cfg)
    if p.uniform_fibres:
        return 0.0, 0.0
    snapped, k = snap_theta(p, theta, config=cfg)
    s = intermediate_dim(p, snapped, config=cfg)
    L = window_index(p, snapped, config=cfg)
    d_minus = _sprime(p, snapped, s, L, cfg)
    if k is None or k == 0:
        return d_minus, d_minus
    return d_minus, _sprime(p, snapped, s, k, cfg)


def t_prime(p: ColumnProfile, *, config: FractalConfig | None = None) -> float:
    """
    Tangency point of T_(dim_H): the t with I'(t) = 1/gamma.
    T_(dim_H) 的切点：满足 I'(t) = 1/gamma 的 t。
    """
    cfg = config or resolve_config()
    return rate_fn_for(p, cfg).mean_map(1.0 / p.gamma)


def t_star(p: ColumnProfile, *, config: FractalConfig | None = None) -> float:
    """
    The t with I(t) = (dim_B - dim_H) log m / (1 - 1/gamma), located in (t', t_high).
    满足 I(t) = (dim_B - dim_H) log m / (1 - 1/gamma) 的 t，位于 (t', t_high)。
    """
    cfg = config or resolve_config()
    if p.uniform_fibres:
        raise DomainError(message="t* needs non-uniform fibres / t* 需要非均匀纤维", error_code="uniform_fibres")
    rf = rate_fn_for(p, cfg)
    target = (dim_box(p) - dim_hausdorff(p)) * math.log(p.m) / (1.0 - 1.0 / p.gamma)
    lo, hi = t_prime(p, config=cfg), p.t_high
    if rate_I(rf, hi) < target:
        raise RootSearchError(
            message="t* not bracketed by (t', t_high) / t* 未被 (t', t_high) 定界",
            details={"target": target},
            error_code="t_star_bracket",
        )
    return float(bisect(lambda t: rate_I(rf, t) - target, lo, hi, xtol=cfg.root_tol, maxiter=cfg.max_bisect_iter))


def _gap_term(p: ColumnProfile, rf: RateFn, t: float) -> float:
    return math.log(p.N) - t - math.log(p.M) + rate_I(rf, t)


def transition_gap_limit(p: ColumnProfile, *, config: FractalConfig | None = None) -> float:
    """
    Limit of d_plus/d_minus at gamma^-L as L grows.
    L 增大时 gamma^-L 处 d_plus/d_minus 的极限。
    """
    cfg = config or resolve_config()
    rf = rate_fn_for(p, cfg)
    ts = t_star(p, config=cfg)
    t_top = t_of_s(p, dim_hausdorff(p)) + p.gamma * rate_I(rf, ts)
    return _gap_term(p, rf, ts) / _gap_term(p, rf, t_top)


def transition_ratio(p: ColumnProfile, L: int, *, config: FractalConfig | None = None) -> float:
    """d_plus/d_minus at theta = gamma^-L (L >= 1) / theta = gamma^-L 处的 d_plus/d_minus。"""
    d_minus, d_plus = dim_derivatives(p, p.gamma ** (-L), config=config)
    return d_plus / d_minus


def asymptote_band(
    p: ColumnProfile, thetas: np.ndarray | list[float], *, config: FractalConfig | None = None
) -> tuple[float, np.ndarray]:
    """
    Small-theta band (dim_theta - dim_H)(log theta)^2 and the fitted constant C.
    小 theta 区间的 (dim_theta - dim_H)(log theta)^2 及拟合常数 C。

    Returns:
        tuple[float, np.ndarray]: (C, band) with C >= 1 the smallest constant such that 1/C <= band <= C.
        tuple[float, np.ndarray]: (C, band)，C >= 1 为使 1/C <= band <= C 的最小常数。
    """
    d_h = dim_hausdorff(p)
    grid = np.asarray(thetas, dtype=float)
    band = np.array([(intermediate_dim(p, float(t), config=config) - d_h) * math.log(t) ** 2 for t in grid])
    c_hat = max(1.0, float(band.max()), float(1.0 / band.min()))
    return c_hat, band


@dataclass(frozen=True, slots=True)
class ThetaGrid:
    """
    Sampling grid specification.
    采样网格规格。

    Attributes:
        theta_min: Smallest theta.
        theta_min: 最小 theta。
        theta_max: Largest theta (<= 1).
        theta_max: 最大 theta（<= 1）。
        count: Number of base samples (>= 2).
        count: 基础采样点数（>= 2）。
        include_transitions: Add every gamma^-L inside the range.
        include_transitions: 加入区间内所有 gamma^-L。
        spacing: "linear" or "log".
        spacing: "linear" 或 "log"。
    """

    theta_min: float
    theta_max: float = 1.0
    count: int = 512
    include_transitions: bool = True
    spacing: Literal["linear", "log"] = "linear"

    def __post_init__(self) -> None:
        if self.count < 2 or not 0.0 < self.theta_min < self.theta_max <= 1.0:
            raise DomainError(
                message=f"Invalid theta grid {self.theta_min}:{self.theta_max}:{self.count} / theta 网格无效",
                details={"min": self.theta_min, "max": self.theta_max, "count": self.count},
                error_code="bad_grid_spec",
            )

    @classmethod
    def parse(cls, text: str, *, include_transitions: bool = True) -> "ThetaGrid":
        """
        Parse "min:max:count".
        解析 "min:max:count"。
        """
        parts = text.split(":")
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except (IndexError, ValueError) as exc:
            raise DomainError(
                message=f"Theta grid must be min:max:count, got {text!r} / theta 网格格式应为 min:max:count",
                details={"grid": text},
                error_code="bad_grid_spec",
            ) from exc
        if len(parts) != 3:
            raise DomainError(message=f"Theta grid must be min:max:count, got {text!r}", error_code="bad_grid_spec")
        return cls(theta_min=lo, theta_max=hi, count=count, include_transitions=include_transitions)

    def transitions(self, gamma: float) -> list[float]:
        """gamma^-L inside [theta_min, theta_max], descending L order ascending theta."""
        out = []
        L = 0
        while True:
            v = gamma ** (-L)
            if v < self.theta_min:
                break
            if v <= self.theta_max:
                out.append(v)
            L += 1
        return sorted(out)

    def samples(self, gamma: float) -> np.ndarray:
        """Grid points, merged with the transitions when requested / 网格点（按需合并转变点）。"""
        if self.spacing == "log":
            base = np.geomspace(self.theta_min, self.theta_max, self.count)
        else:
            base = np.linspace(self.theta_min, self.theta_max, self.count)
        if self.include_transitions:
            base = np.concatenate([base, self.transitions(gamma)])
        return np.unique(base)


@dataclass(frozen=True, slots=True)
class DimCurve:
    """
    Sampled intermediate-dimension curve.
    采样得到的中间维数曲线。

    Attributes:
        profile: Column profile.
        profile: 列统计。
        thetas: Ascending theta samples.
        thetas: 递增的 theta 采样。
        values: dim_theta samples.
        values: dim_theta 采样值。
        L_index: Window index per sample.
        L_index: 每个采样点的窗口序号。
        tL: t_L(dim_theta) per sample.
        tL: 每个采样点的 t_L(dim_theta)。
        d_minus: Left derivatives.
        d_minus: 左导数。
        d_plus: Right derivatives.
        d_plus: 右导数。
        transitions: gamma^-L values inside the sampled range.
        transitions: 采样区间内的 gamma^-L 值。
    """

    profile: ColumnProfile
    thetas: np.ndarray
    values: np.ndarray
    L_index: np.ndarray
    tL: np.ndarray
    d_minus: np.ndarray
    d_plus: np.ndarray
    transitions: list[float] = field(default_factory=list)

    def to_rows(self) -> list[dict[str, float | int]]:
        """
        Rows keyed by the curve CSV header.
        以曲线 CSV 表头为键的行。
        """
        return [
            {
                "theta": float(self.thetas[i]),
                "dim": float(self.values[i]),
                "L": int(self.L_index[i]),
                "tL": float(self.tL[i]),
                "d_minus": float(self.d_minus[i]),
                "d_plus": float(self.d_plus[i]),
            }
            for i in range(len(self.thetas))
        ]


def curve(
    p: ColumnProfile,
    grid: ThetaGrid | np.ndarray | list[float],
    *,
    method: RootMethod = "bisect",
    config: FractalConfig | None = None,
) -> DimCurve:
    """
    Sample dim_theta, window data and one-sided derivatives over a grid.
    在网格上采样 dim_theta、窗口数据与单侧导数。

    Args:
        p: Column profile.
        p: 列统计。
        grid: Grid specification, or explicit theta samples.
        grid: 网格规格或显式 theta 采样。
        method: Root method passed to intermediate_dim.
        method: 传给 intermediate_dim 的求根方法。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        DimCurve: Sampled curve.
        DimCurve: 采样曲线。
    """
    cfg = config or resolve_config()
    if isinstance(grid, ThetaGrid):
        thetas, transitions = grid.samples(p.gamma), grid.transitions(p.gamma)
    else:
        thetas = np.asarray(grid, dtype=float)
        transitions = ThetaGrid(theta_min=float(thetas.min()), theta_max=float(thetas.max())).transitions(p.gamma)
    # Snap grid points that coincide with transitions / 与转变点重合的网格点做吸附
    thetas = np.unique(np.array([snap_theta(p, float(t), config=cfg)[0] for t in thetas]))
    size = len(thetas)
    values = np.empty(size)
    L_index = np.empty(size, dtype=int)
    tL = np.empty(size)
    d_minus = np.empty(size)
    d_plus = np.empty(size)
    if p.uniform_fibres:
        warnings.warn("Uniform fibres: the curve is constant / 均匀纤维：曲线为常数", stacklevel=2)
    for i, theta in enumerate(thetas):
        theta = float(theta)
        L = window_index(p, theta, config=cfg)
        L_index[i] = L
        if p.uniform_fibres:
            values[i], tL[i], d_minus[i], d_plus[i] = dim_hausdorff(p), p.t_low, 0.0, 0.0
            continue
        s = intermediate_dim(p, theta, method=method, config=cfg)
        values[i] = s
        tL[i] = t_sequence(p, s, L, config=cfg)[-1]
        d_minus[i], d_plus[i] = dim_derivatives(p, theta, config=cfg)
    logger.info("sampled %d theta values (L up to %d)", size, int(L_index.max()))
    return DimCurve(
        profile=p,
        thetas=thetas,
        values=values,
        L_index=L_index,
        tL=tL,
        d_minus=d_minus,
        d_plus=d_plus,
        transitions=transitions,
    )
