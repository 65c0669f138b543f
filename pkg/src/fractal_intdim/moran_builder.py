"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: moran_builder.py
@DateTime: 2026-10-17
@Docs: Homogeneous Moran sets with prescribed intermediate dimensions.
具有给定中间维数的齐次 Moran 集。

Pipeline / 流程:
        1) build_g_from_h: concatenate mountains and valleys into a class-G function g.
           build_g_from_h：由山峰与山谷拼接出 G 类函数 g。
        2) discretize: turn g into contraction ratios r_k so that s_r(exp(-exp(x))) tracks g(x).
           discretize：将 g 离散为压缩比 r_k，使 s_r(exp(-exp(x))) 跟随 g(x)。
        3) sliding_window_dim: limsup over x of the infimum of s over [x, x + log(1/theta)].
           sliding_window_dim：s 在 [x, x + log(1/theta)] 上下确界关于 x 的上极限。

The Moran set itself is never materialized; every statement goes through s_r.
Moran 集本身从不展开，所有结论都通过 s_r 得到。
"""

import logging
import math
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from scipy.optimize import bisect

from fractal_intdim.bounds_families import HSpec, hclass_check
from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import CapacityError, DomainError, RootSearchError

logger = logging.getLogger(__name__)

_LOG2 = math.log(2.0)
_DINI_STEP = 1e-7


class ArcKind(StrEnum):
    """Arc shape / 弧段形状。"""

    RISE = "rise"
    FALL = "fall"
    TABLE = "table"


@dataclass(frozen=True, slots=True, eq=False)
class Arc:
    """
    One monotone piece of g.
    g 的一个单调片段。

    Attributes:
        kind: rise (target - (target - g0) e^-u), fall (same form towards lambda) or table (descending samples).
        kind: rise、fall（同形式趋向 lambda）或 table（递减采样）。
        start: Left end in x.
        start: 左端点 x。
        length: Arc length.
        length: 弧长。
        g0: Value at the left end.
        g0: 左端点值。
        target: alpha for rise, lambda for fall.
        target: rise 为 alpha，fall 为 lambda。
        xs: Table offsets from start (ascending, first 0).
        xs: 表格相对起点的偏移（递增，首项为 0）。
        ys: Table values (non-increasing).
        ys: 表格取值（非增）。
    """

    kind: ArcKind
    start: float
    length: float
    g0: float
    target: float = 0.0
    xs: np.ndarray | None = None
    ys: np.ndarray | None = None

    @property
    def end(self) -> float:
        return self.start + self.length

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        u = np.asarray(x, dtype=float) - self.start
        if self.kind is ArcKind.TABLE:
            return np.interp(u, self.xs, self.ys)
        return self.target - (self.target - self.g0) * np.exp(-u)

    @property
    def end_value(self) -> float:
        return float(self.evaluate(np.asarray(self.end)))

    def minimum(self, a: float, b: float) -> float:
        """Minimum on [a, b] intersected with the arc / 在 [a, b] 与弧段交集上的最小值。"""
        lo, hi = max(a, self.start), min(b, self.end)
        if self.kind is ArcKind.RISE:
            return float(self.evaluate(np.asarray(lo)))
        if self.kind is ArcKind.FALL:
            return float(self.evaluate(np.asarray(hi)))
        ends = self.evaluate(np.asarray([lo, hi]))
        inside = self.ys[(self.xs > lo - self.start) & (self.xs < hi - self.start)]
        return float(min(ends.min(), inside.min())) if inside.size else float(ends.min())

    def crossing(self, level: float) -> float | None:
        """x where the arc meets level, or None / 弧段取到 level 的位置，无则为 None。"""
        lo_v, hi_v = sorted((self.g0, self.end_value))
        if not lo_v <= level <= hi_v:
            return None
        if self.kind is ArcKind.TABLE:
            return self.start + float(np.interp(level, self.ys[::-1], self.xs[::-1]))
        if level == self.g0:
            return self.start
        return self.start + math.log((self.target - self.g0) / (self.target - level))


@dataclass(frozen=True, slots=True)
class Mountain:
    """
    Placement of one mountain and its following valley.
    一个山峰及其后续山谷的位置。

    Attributes:
        index: n (1-based).
        index: 序号 n（从 1 开始）。
        eps: epsilon_n.
        eps: epsilon_n。
        start: Left end of the mountain.
        start: 山峰左端点。
        x_star: Length of the rising arc.
        x_star: 上升弧长度。
        end: Right end of the mountain (start + log(1/eps)).
        end: 山峰右端点（start + log(1/eps)）。
        valley_end: Right end of the valley.
        valley_end: 山谷右端点。
        gamma: Valley floor gamma_n.
        gamma: 山谷底值 gamma_n。
    """

    index: int
    eps: float
    start: float
    x_star: float
    end: float
    valley_end: float
    gamma: float


@dataclass(frozen=True, slots=True, eq=False)
class GFunction:
    """
    Class-G function stored as concatenated arcs over [0, extent].
    以拼接弧段存储于 [0, extent] 上的 G 类函数。

    Attributes:
        lam: lambda.
        lam: lambda。
        alpha: alpha.
        alpha: alpha。
        d: Ambient dimension.
        d: 环境维数。
        arcs: Arcs in x order.
        arcs: 按 x 排列的弧段。
        mountains: Mountain placements.
        mountains: 山峰位置。
    """

    lam: float
    alpha: float
    d: int
    arcs: tuple[Arc, ...]
    mountains: tuple[Mountain, ...] = ()
    _starts: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not 0.0 <= self.lam < self.alpha <= self.d or not self.arcs:
            raise DomainError(
                message=f"Invalid g parameters lambda={self.lam}, alpha={self.alpha}, d={self.d} / g 参数无效",
                error_code="bad_g",
            )
        object.__setattr__(self, "_starts", np.asarray([a.start for a in self.arcs]))

    @property
    def extent(self) -> float:
        return self.arcs[-1].end

    def _arc_index(self, x: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self._starts, x, side="right") - 1
        return np.clip(idx, 0, len(self.arcs) - 1)

    def evaluate(self, x: float | np.ndarray) -> float | np.ndarray:
        """
        g(x) for x in [0, extent].
        计算 x 位于 [0, extent] 时的 g(x)。
        """
        arr = np.asarray(x, dtype=float)
        if np.any(arr < 0.0) or np.any(arr > self.extent + 1e-12):
            raise DomainError(
                message=f"x outside [0, {self.extent}] / x 超出 g 的定义域",
                details={"extent": self.extent},
                error_code="g_extent",
            )
        flat = arr.reshape(-1)
        idx = self._arc_index(flat)
        out = np.empty_like(flat)
        for i in np.unique(idx):
            mask = idx == i
            out[mask] = self.arcs[i].evaluate(flat[mask])
        return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)

    def window_min(self, a: float, b: float) -> float:
        """
        min of g over [a, b], exact from arc monotonicity.
        g 在 [a, b] 上的最小值（利用弧段单调性精确求得）。
        """
        first, last = int(self._arc_index(np.asarray(a))), int(self._arc_index(np.asarray(b)))
        return min(self.arcs[i].minimum(a, b) for i in range(first, last + 1))

    def level_crossings(self, level: float, a: float = 0.0, b: float | None = None) -> list[float]:
        """
        Points in [a, b] where a monotone arc of g meets level (one per arc).
        [a, b] 中 g 的单调弧段取到 level 的点（每个弧段至多一个）。
        """
        hi = self.extent if b is None else b
        out: list[float] = []
        last = len(self.arcs) - 1
        for i, arc in enumerate(self.arcs):
            if arc.end < a or arc.start > hi:
                continue
            x = arc.crossing(level)
            # Half-open arcs so shared junctions count once / 半开区间使连接点只计一次
            if x is None or not (arc.start <= x < arc.end or (i == last and x == arc.end)):
                continue
            if a <= x <= hi and (not out or x - out[-1] > 1e-12):
                out.append(x)
        return out


def _append(arcs: list[Arc], arc: Arc) -> None:
    if arc.length > 0.0:
        arcs.append(arc)


def _mountain_table(h: HSpec, eps: float, alpha: float, h_eps: float, points: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Descending arc nodes (x(theta) + log(1/theta), h(theta)) for theta in [eps, 1].
    下降弧节点 (x(theta) + log(1/theta), h(theta))，theta 位于 [eps, 1]。
    """
    grid = np.asarray(h.thetas)
    thetas = np.unique(np.concatenate([grid[grid > eps], np.geomspace(eps, 1.0, points), [eps, 1.0]]))
    values = np.interp(thetas, h.thetas, h.values)
    xs = np.log((alpha - h_eps) / (alpha - values)) + np.log(1.0 / thetas)
    order = np.argsort(xs, kind="stable")
    xs, values = xs[order], values[order]
    if np.any(np.diff(values) > 1e-12):
        raise DomainError(
            message="Mountain descent is not monotone; h leaves the class / 山峰下降段不单调",
            details={"eps": eps},
            error_code="h_not_in_class",
        )
    keep = np.concatenate([[True], np.diff(xs) > 1e-15])
    return xs[keep], values[keep]


def build_g_from_h(h: HSpec, *, d: int, x_max: float = 64.0, table_points: int = 64) -> GFunction:
    """
    Concatenate mountains f_n and valleys e_n until the extent reaches x_max.
    拼接山峰 f_n 与山谷 e_n，直到长度达到 x_max。

    Args:
        h: Prescription in H(lambda, alpha) with lambda <= h(0), h < alpha.
        h: H(lambda, alpha) 中的给定函数，要求 lambda <= h(0) 且 h < alpha。
        d: Ambient dimension (alpha <= d).
        d: 环境维数（alpha <= d）。
        x_max: Required extent.
        x_max: 需要覆盖的长度。
        table_points: Extra geometric theta nodes per mountain descent.
        table_points: 每个山峰下降段额外的几何 theta 节点数。

    Returns:
        GFunction: Built g.
        GFunction: 构造出的 g。

    Raises:
        DomainError: h outside the class or outside the main case.
        DomainError: h 不属于该类或不在主情形内。
    """
    lam, alpha = h.lam, h.alpha
    report = hclass_check(h)
    if not report.passed:
        raise DomainError(
            message=f"h violates the class bound at {report.first_violation} / h 违反类约束",
            details={"violation": list(report.first_violation)},
            error_code="h_not_in_class",
        )
    vals = np.asarray(h.values)
    h0 = float(vals[0]) if h.thetas[0] == 0.0 else h(0.0)
    if not (lam < alpha <= d) or np.any(vals >= alpha) or h0 < lam or (h0 == lam and np.any(vals[1:] <= lam)):
        raise DomainError(
            message="h must satisfy lambda <= h(0), lambda < h(theta) < alpha, alpha <= d / h 不在主情形内",
            details={"lambda": lam, "alpha": alpha, "d": d},
            error_code="h_main_case",
        )

    arcs: list[Arc] = []
    mountains: list[Mountain] = []
    pos = 0.0
    n = 1
    while pos < x_max:
        eps, eps_next = 2.0**-n, 2.0 ** -(n + 1)
        h_eps, h_next, h_one = h(eps), h(eps_next), h(1.0)
        gamma = h0 if h0 > lam else h0 + (h_next - h0) / 2.0
        start = pos
        x_star = math.log((alpha - h_eps) / (alpha - h_one))
        _append(arcs, Arc(kind=ArcKind.RISE, start=pos, length=x_star, g0=h_eps, target=alpha))
        pos += x_star
        xs, ys = _mountain_table(h, eps, alpha, h_eps, table_points)
        # Table starts at x* (theta = 1) / 表格从 x*（theta = 1）开始
        offsets = xs - xs[0]
        _append(arcs, Arc(kind=ArcKind.TABLE, start=pos, length=float(offsets[-1]), g0=float(ys[0]), xs=offsets, ys=ys))
        pos = start + math.log(1.0 / eps)
        mountain_end = pos
        w_star = math.log((h_eps - lam) / (gamma - lam))
        _append(arcs, Arc(kind=ArcKind.FALL, start=pos, length=w_star, g0=h_eps, target=lam))
        pos += w_star
        rise = math.log((alpha - gamma) / (alpha - h_next))
        _append(arcs, Arc(kind=ArcKind.RISE, start=pos, length=rise, g0=gamma, target=alpha))
        pos += rise
        mountains.append(
            Mountain(index=n, eps=eps, start=start, x_star=x_star, end=mountain_end, valley_end=pos, gamma=gamma)
        )
        n += 1
    logger.debug("built g with %d mountains, %d arcs, extent %.6g", len(mountains), len(arcs), pos)
    return GFunction(lam=lam, alpha=alpha, d=d, arcs=tuple(arcs), mountains=tuple(mountains))


@dataclass(frozen=True, slots=True)
class GClassReport:
    """
    Result of the integrated G-class check.
    G 类积分约束检查结果。

    Attributes:
        passed: True when every adjacent pair satisfies both bounds.
        passed: 所有相邻样本对都满足两侧界时为 True。
        worst_excess: Largest bound excess found.
        worst_excess: 最大超出量。
        first_violation: x of the first violating pair, if any.
        first_violation: 首个违例对的 x（如有）。
    """

    passed: bool
    worst_excess: float
    first_violation: float | None = None


def g_class_check(g: GFunction, samples: np.ndarray | None = None, *, tol: float = 1e-9) -> GClassReport:
    """
    Check lambda - (lambda - g0) e^-x <= g(x0 + x) <= alpha - (alpha - g0) e^-x on adjacent samples.
    在相邻样本上检查 lambda - (lambda - g0) e^-x <= g(x0 + x) <= alpha - (alpha - g0) e^-x。
    """
    if samples is None:
        xs = np.unique(np.concatenate([np.linspace(0.0, g.extent, 20001), g._starts]))
    else:
        xs = np.unique(np.asarray(samples, dtype=float))
    vals = np.asarray(g.evaluate(xs))
    decay = np.exp(-np.diff(xs))
    g0, g1 = vals[:-1], vals[1:]
    upper = g.alpha - (g.alpha - g0) * decay
    lower = g.lam - (g.lam - g0) * decay
    excess = np.maximum(g1 - upper, lower - g1)
    bad = np.flatnonzero(excess > tol)
    return GClassReport(
        passed=bad.size == 0,
        worst_excess=float(excess.max()),
        first_violation=float(xs[bad[0]]) if bad.size else None,
    )


@dataclass(frozen=True, slots=True, eq=False)
class MoranPlan:
    """
    Finite prefix of a homogeneous Moran construction.
    齐次 Moran 构造的有限前缀。

    Attributes:
        d: Ambient dimension.
        d: 环境维数。
        w0: Offset log log(1/r_1).
        w0: 偏移量 log log(1/r_1)。
        ratios: r_1, ..., r_K in (0, 1/2].
        ratios: r_1, ..., r_K，位于 (0, 1/2]。
        x: x_k = log log(1/rho_k).
        x: x_k = log log(1/rho_k)。
        g: Source function in unshifted coordinates, when known.
        g: 未平移坐标下的源函数（已知时）。
    """

    d: int
    w0: float
    ratios: tuple[float, ...]
    x: tuple[float, ...]
    g: GFunction | None = None
    _xs: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.ratios or len(self.ratios) != len(self.x):
            raise DomainError(message="Plan needs matching ratios and x / 方案的 ratios 与 x 须等长", error_code="bad_plan")
        if any(not 0.0 < r <= 0.5 + 1e-12 for r in self.ratios):
            raise DomainError(message="Ratios must lie in (0, 1/2] / 压缩比须位于 (0, 1/2]", error_code="bad_plan")
        object.__setattr__(self, "_xs", np.asarray(self.x, dtype=float))

    @classmethod
    def from_ratios(cls, d: int, ratios: list[float] | tuple[float, ...]) -> "MoranPlan":
        """
        Rebuild x_k from the ratios alone.
        仅由压缩比重建 x_k。
        """
        cum = np.cumsum(-np.log(np.asarray(ratios, dtype=float)))
        xs = np.log(cum)
        return cls(d=d, w0=float(xs[0]), ratios=tuple(float(r) for r in ratios), x=tuple(float(v) for v in xs))

    @property
    def depth(self) -> int:
        return len(self.ratios)

    @property
    def step(self) -> float:
        """d log 2, the log-count of one level / 单层计数的对数 d log 2。"""
        return self.d * _LOG2

    @property
    def reach(self) -> float:
        """Largest x where s is available / s 可计算的最大 x。"""
        return self.w0 + self.g.extent if self.g is not None else float(self._xs[-1])

    def g_at(self, x: float | np.ndarray) -> float | np.ndarray:
        """g(x - w0) in plan coordinates / 方案坐标下的 g(x - w0)。"""
        if self.g is None:
            raise DomainError(message="Plan carries no g / 方案不含 g", error_code="plan_without_g")
        return self.g.evaluate(np.asarray(x, dtype=float) - self.w0)

    def level_count(self, y: float) -> int:
        """
        k with rho_k <= exp(-exp(y)) < rho_(k-1).
        满足 rho_k <= exp(-exp(y)) < rho_(k-1) 的 k。

        Beyond the stored prefix the count follows from the cumulative function g(x) e^x.
        超出显式前缀时，由累积函数 g(x) e^x 得到。
        """
        if y <= self._xs[-1]:
            return int(np.searchsorted(self._xs, y, side="left")) + 1
        if y > self.reach + 1e-12:
            raise DomainError(
                message=f"y={y} beyond plan reach {self.reach} / y 超出方案范围",
                details={"y": y, "reach": self.reach},
                error_code="window_out_of_range",
            )
        phi = float(self.g_at(y)) * math.exp(y)
        return max(1, math.ceil(phi / self.step) - 1)

    def scale_dim(self, y: float) -> float:
        """s_r(exp(-exp(y))) = k d log 2 e^-y / 尺度 exp(-exp(y)) 处的 s_r。"""
        return self.level_count(y) * self.step * math.exp(-y)


def _next_x(g: GFunction, w0: float, y: float, target: float, cfg: FractalConfig) -> float:
    """
    Minimal x > y with g(x - w0) e^x = target, scanning from the analytic floor.
    从解析下界开始扫描，求满足 g(x - w0) e^x = target 的最小 x > y。
    """

    def phi(x: float) -> float:
        return float(g.evaluate(x - w0)) * math.exp(x) - target

    limit = w0 + g.extent
    lo = math.log(math.exp(y) + _LOG2)
    if lo > limit:
        raise CapacityError(
            message=f"g extent exhausted at y={y} / g 的定义域在 y={y} 处耗尽",
            details={"y": y, "extent": g.extent},
            error_code="g_extent",
        )
    if phi(lo) >= 0.0:
        return lo
    step = math.exp(-y) / 4.0
    hi = lo + step
    while True:
        hi = min(hi, limit)
        if phi(hi) >= 0.0:
            break
        if hi >= limit:
            raise CapacityError(
                message=f"g extent exhausted while stepping from y={y} / 从 y={y} 推进时 g 的定义域耗尽",
                details={"y": y, "extent": g.extent},
                error_code="g_extent",
            )
        lo, hi = hi, hi + step
    try:
        return float(bisect(phi, lo, hi, xtol=1e-14, maxiter=4 * cfg.max_bisect_iter))
    except (RuntimeError, ValueError) as exc:
        raise RootSearchError(
            message=f"psi step failed at y={y} / psi 步求根失败",
            details={"y": y, "bracket": [lo, hi], "error": str(exc)},
            error_code="psi_root",
        ) from exc


def discretize(g: GFunction, depth: int | None = None, *, config: FractalConfig | None = None) -> MoranPlan:
    """
    Contraction ratios whose covering exponent tracks g.
    覆盖指数跟随 g 的压缩比序列。

    x_1 = w0 with 2 d log 2 / e^w0 = g(0); x_(k+1) is the first x with g(x - w0) e^x = (k + 2) d log 2.
    x_1 = w0，满足 2 d log 2 / e^w0 = g(0)；x_(k+1) 为首个满足 g(x - w0) e^x = (k + 2) d log 2 的 x。

    Args:
        g: Class-G function (not rapidly decreasing).
        g: G 类函数（非快速递减）。
        depth: Number of ratios K (default config.moran_depth).
        depth: 压缩比个数 K（默认 config.moran_depth）。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        MoranPlan: Plan satisfying |s_r - g| <= d log 2 e^-x at every stored x_k.
        MoranPlan: 在所有 x_k 处满足 |s_r - g| <= d log 2 e^-x 的方案。
    """
    cfg = config or resolve_config()
    depth = cfg.moran_depth if depth is None else depth
    if depth < 1:
        raise DomainError(message=f"depth must be >= 1, got {depth} / depth 必须 >= 1", error_code="bad_depth")
    step = g.d * _LOG2
    g_zero = float(g.evaluate(0.0))
    if g_zero <= 0.0:
        raise DomainError(message="g(0) must be positive / g(0) 必须为正", error_code="bad_g")
    w0 = math.log(2.0 * step / g_zero)
    xs = [w0]
    for k in range(1, depth):
        xs.append(_next_x(g, w0, xs[-1], (k + 2) * step, cfg))
        if k % 500 == 0:
            logger.debug("discretize: k=%d x=%.12g", k, xs[-1])
    exp_x = np.exp(np.asarray(xs))
    log_inv = np.diff(np.concatenate([[0.0], exp_x]))
    ratios = tuple(float(r) for r in np.exp(-log_inv))
    plan = MoranPlan(d=g.d, w0=w0, ratios=ratios, x=tuple(xs), g=g)
    worst = discretization_error(plan)
    if worst > 1.0 + 1e-8:
        raise RootSearchError(
            message=f"Discretization bound violated (normalized error {worst}) / 离散化界不成立",
            details={"normalized_error": worst},
            error_code="discretization_bound",
        )
    logger.info("discretized g into %d ratios (x_K=%.6g)", depth, xs[-1])
    return plan


def discretization_error(plan: MoranPlan) -> float:
    """
    max |s_r(exp(-exp(x))) - g(x)| / (d log 2 e^-x) over breakpoints and midpoints.
    在断点与中点上计算 |s_r(exp(-exp(x))) - g(x)| / (d log 2 e^-x) 的最大值。
    """
    xs = plan._xs
    mids = 0.5 * (xs[:-1] + xs[1:])
    pts = np.concatenate([xs, mids])
    counts = np.concatenate([np.arange(1, len(xs) + 1), np.arange(2, len(xs) + 1)])
    s = counts * plan.step * np.exp(-pts)
    g = np.asarray(plan.g_at(pts))
    return float(np.max(np.abs(s - g) / (plan.step * np.exp(-pts))))


def discretization_residuals(plan: MoranPlan) -> np.ndarray:
    """
    Per-breakpoint normalized residual |s_r - g| / (d log 2 e^-x_k), k = 1..K.
    每个断点的归一化残差 |s_r - g| / (d log 2 e^-x_k)，k = 1..K。
    """
    xs = plan._xs
    s = np.arange(1, len(xs) + 1) * plan.step * np.exp(-xs)
    return np.abs(s - np.asarray(plan.g_at(xs))) / (plan.step * np.exp(-xs))


def _window_inf(plan: MoranPlan, a: float, b: float) -> float:
    """
    inf of s over [a, b]: breakpoints inside and the right end; g bounds it beyond the prefix.
    s 在 [a, b] 上的下确界：区间内断点与右端点；超出前缀部分由 g 给出。
    """
    xs = plan._xs
    x_k = float(xs[-1])
    lo_i = int(np.searchsorted(xs, a, side="left"))
    hi_i = int(np.searchsorted(xs, min(b, x_k), side="right"))
    candidates = [plan.scale_dim(b)]
    if hi_i > lo_i:
        ks = np.arange(lo_i + 1, hi_i + 1)
        candidates.append(float(np.min(ks * plan.step * np.exp(-xs[lo_i:hi_i]))))
    if b > x_k:
        left = max(a, x_k)
        candidates.append(plan.g.window_min(left - plan.w0, b - plan.w0))
    return min(candidates)


def _window_sup(plan: MoranPlan, a: float, b: float) -> float:
    """sup of s over [a, b] (right limits at breakpoints) / s 在 [a, b] 上的上确界。"""
    xs = plan._xs
    x_k = float(xs[-1])
    candidates = [plan.scale_dim(a)]
    lo_i = int(np.searchsorted(xs, a, side="left"))
    hi_i = int(np.searchsorted(xs, min(b, x_k), side="right"))
    if hi_i > lo_i:
        ks = np.arange(lo_i + 2, hi_i + 2)
        candidates.append(float(np.max(ks * plan.step * np.exp(-xs[lo_i:hi_i]))))
    if b > x_k:
        grid = np.linspace(max(a, x_k), b, 257)
        candidates.append(float(np.max(plan.g_at(grid))))
    return max(candidates)


def sliding_window_dim(
    plan: MoranPlan, theta: float, x_window: tuple[float, float], *, samples: int = 4096
) -> float:
    """
    Finite-depth estimate of limsup_x inf_{y in [x, x + log(1/theta)]} s(exp(-exp(y))).
    limsup_x inf_{y in [x, x + log(1/theta)]} s(exp(-exp(y))) 的有限深度估计。

    Args:
        plan: Moran plan.
        plan: Moran 方案。
        theta: theta in (0, 1].
        theta: theta，位于 (0, 1]。
        x_window: [x_lo, x_hi] range of window left ends.
        x_window: 窗口左端点的范围 [x_lo, x_hi]。
        samples: Number of left ends sampled.
        samples: 采样的左端点个数。

    Returns:
        float: Max over sampled left ends of the window infimum; at theta = 1 the max of s itself.
        float: 采样左端点上窗口下确界的最大值；theta = 1 时为 s 本身的最大值。

    Raises:
        DomainError: Window outside the plan or holding fewer than 3 breakpoints.
        DomainError: 窗口超出方案范围或断点少于 3 个。
    """
    if not 0.0 < theta <= 1.0:
        raise DomainError(message=f"theta={theta} outside (0, 1] / theta 超出 (0, 1]", error_code="theta_domain")
    x_lo, x_hi = x_window
    span = math.log(1.0 / theta)
    if not (plan.x[0] <= x_lo <= x_hi) or x_hi + span > plan.reach + 1e-12:
        raise DomainError(
            message=f"Window [{x_lo}, {x_hi}] + {span:.6g} outside plan range / 窗口超出方案范围",
            details={"window": [x_lo, x_hi], "reach": plan.reach},
            error_code="window_out_of_range",
        )
    if plan.level_count(x_hi + span) - plan.level_count(x_lo) < 3:
        raise DomainError(
            message="Window holds fewer than 3 breakpoints / 窗口内断点少于 3 个",
            details={"window": [x_lo, x_hi]},
            error_code="window_too_small",
        )
    if theta == 1.0:
        return _window_sup(plan, x_lo, x_hi)
    lefts = np.linspace(x_lo, x_hi, samples)
    best = max(_window_inf(plan, float(x), float(x) + span) for x in lefts)
    logger.debug("sliding window theta=%.6g on [%.6g, %.6g]: %.12g", theta, x_lo, x_hi, best)
    return best


def moran_assouad_lower_bounds(
    source: MoranPlan | GFunction, *, tail_from: float = 0.0, per_arc: int = 8
) -> tuple[float, float]:
    """
    limsup and liminf of D+g + g over the sampled tail: an upper bound for the Assouad dimension
    and a lower bound for the lower dimension.
    采样尾部上 D+g + g 的上、下极限：Assouad 维数的上界与下维数的下界。

    Args:
        source: Plan carrying g, or g itself.
        source: 携带 g 的方案或 g 本身。
        tail_from: Smallest x (in g coordinates) included.
        tail_from: 参与计算的最小 x（g 坐标）。
        per_arc: Interior samples per arc.
        per_arc: 每个弧段的内部采样数。

    Returns:
        tuple[float, float]: (assouad_upper, lower_lower).
        tuple[float, float]: (Assouad 上界, 下维数下界)。
    """
    g = source.g if isinstance(source, MoranPlan) else source
    if g is None:
        raise DomainError(message="Plan carries no g / 方案不含 g", error_code="insufficient_samples")
    pts: list[np.ndarray] = []
    for arc in g.arcs:
        if arc.end <= tail_from or arc.length <= 2 * _DINI_STEP:
            continue
        lo = max(arc.start, tail_from)
        inner = np.linspace(lo, arc.end - _DINI_STEP, per_arc + 2)[1:-1]
        pts.append(inner)
    if not pts:
        raise DomainError(message="Too few tail samples / 尾部样本过少", error_code="insufficient_samples")
    x = np.concatenate(pts)
    gx = np.asarray(g.evaluate(x))
    dini = (np.asarray(g.evaluate(x + _DINI_STEP)) - gx) / _DINI_STEP
    total = dini + gx
    return float(total.max()), float(total.min())
