"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: spectra_equivalence.py
@DateTime: 2026-10-17
@Docs: Multifractal and L^q spectra of the uniform self-affine measure; carpet equivalence tests.
均匀自仿测度的多重分形谱与 L^q 谱；载毯等价性检验。
"""

import logging
import math
import warnings
from dataclasses import dataclass, field
from enum import StrEnum

import numpy as np
from scipy.optimize import bisect
from scipy.special import logsumexp, softmax

from fractal_intdim.carpet_model import CarpetSpec, ColumnProfile, iterate_profile, profile, same_grid_reduction
from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import DomainError, GridMismatchError, RootSearchError
from fractal_intdim.typing import SampledCurve

logger = logging.getLogger(__name__)


class EquivalenceDecision(StrEnum):
    """Outcome of the intermediate-dimension equivalence test.
    中间维数等价性检验结果。
    """

    EQUIVALENT = "equivalent"
    INEQUIVALENT = "inequivalent"
    INCOMPARABLE_GRIDS = "incomparable-grids"


@dataclass(frozen=True, slots=True)
class SpectrumDomain:
    """
    Range of local dimensions of the uniform self-affine measure.
    均匀自仿测度局部维数的取值范围。

    Attributes:
        alpha_min: Smallest local dimension (largest column count).
        alpha_min: 最小局部维数（对应最大列计数）。
        alpha_max: Largest local dimension (smallest column count).
        alpha_max: 最大局部维数（对应最小列计数）。
    """

    alpha_min: float
    alpha_max: float

    @classmethod
    def of(cls, p: ColumnProfile) -> "SpectrumDomain":
        scale = 1.0 / math.log(p.m) - 1.0 / math.log(p.n)
        base = math.log(p.N) / math.log(p.m)
        return cls(alpha_min=base - scale * math.log(p.groups[0][0]), alpha_max=base - scale * math.log(p.groups[-1][0]))


def _exponent(p: ColumnProfile, xi: float) -> float:
    return 1.0 / p.gamma + (1.0 - 1.0 / p.gamma) * xi


def beta(p: ColumnProfile, xi: float) -> float:
    """
    beta(xi): unique solution of m^-beta N^-xi sum_i R_i N_i^(1/gamma + (1-1/gamma) xi) = 1.
    beta(xi)：m^-beta N^-xi sum_i R_i N_i^(1/gamma + (1-1/gamma) xi) = 1 的唯一解。

    Args:
        p: Column profile.
        p: 列统计。
        xi: Real argument.
        xi: 实数自变量。

    Returns:
        float: beta(xi).
        float: beta(xi)。
    """
    lse = float(logsumexp(_exponent(p, xi) * p.group_logs, b=p.group_mult))
    return (-xi * math.log(p.N) + lse) / math.log(p.m)


def beta_prime(p: ColumnProfile, xi: float) -> float:
    """
    Derivative of beta; increasing in xi.
    beta 的导数，关于 xi 递增。
    """
    a = p.group_logs
    w = softmax(_exponent(p, xi) * a + np.log(p.group_mult))
    return (-math.log(p.N) + (1.0 - 1.0 / p.gamma) * float(w @ a)) / math.log(p.m)


def multifractal_spectrum(p: ColumnProfile, alpha: float, *, config: FractalConfig | None = None) -> float:
    """
    f(alpha) = inf_xi (alpha*xi + beta(xi)).
    f(alpha) = inf_xi (alpha*xi + beta(xi))。

    The minimizer solves alpha + beta'(xi) = 0; it is bracketed from [-64, 64] outwards and bisected.
    最小点满足 alpha + beta'(xi) = 0；从 [-64, 64] 向外扩展定界后二分求解。

    Args:
        p: Column profile.
        p: 列统计。
        alpha: Local dimension in (alpha_min, alpha_max).
        alpha: 局部维数，位于 (alpha_min, alpha_max)。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        float: f(alpha).
        float: f(alpha)。

    Raises:
        DomainError: alpha outside the open interval.
        DomainError: alpha 超出开区间。
    """
    cfg = config or resolve_config()
    dom = SpectrumDomain.of(p)
    if not dom.alpha_min < alpha < dom.alpha_max:
        raise DomainError(
            message=f"alpha={alpha} outside ({dom.alpha_min}, {dom.alpha_max}) / alpha 超出谱定义域",
            details={"alpha": alpha, "alpha_min": dom.alpha_min, "alpha_max": dom.alpha_max},
            error_code="spectrum_domain",
        )

    def slope(xi: float) -> float:
        return alpha + beta_prime(p, xi)

    lo, hi = -64.0, 64.0
    while slope(lo) > 0 or slope(hi) < 0:
        lo, hi = 2.0 * lo, 2.0 * hi
        if hi > 2.0**20:
            raise RootSearchError(
                message=f"Cannot bracket spectrum minimizer for alpha={alpha} / 无法定位谱极小点",
                details={"alpha": alpha},
                error_code="spectrum_bracket",
            )
    xi = float(bisect(slope, lo, hi, xtol=cfg.root_tol, maxiter=cfg.max_bisect_iter))
    return alpha * xi + beta(p, xi)


def lq_spectrum(p: ColumnProfile, q: float) -> float:
    """
    L^q spectrum T(q) of the uniform self-affine measure.
    均匀自仿测度的 L^q 谱 T(q)。

    The formula is evaluated for every real q; its measure-theoretic meaning is certified near q = 1.
    公式对所有实数 q 求值；其测度论含义在 q = 1 附近成立。
    """
    log_m, log_n = math.log(p.m), math.log(p.n)
    lse = float(logsumexp(q * p.group_logs, b=p.group_mult))
    return math.log(p.N) / log_n - q * math.log(p.N) / log_m + (1.0 / log_m - 1.0 / log_n) * lse


def lq_spectrum_beta_form(p: ColumnProfile, q: float) -> float:
    """T(q) = (1 - log m/log n) * beta(log(n^q/m) / log(n/m))."""
    xi = (q * math.log(p.n) - math.log(p.m)) / (math.log(p.n) - math.log(p.m))
    return (1.0 - math.log(p.m) / math.log(p.n)) * beta(p, xi)


@dataclass(frozen=True, slots=True)
class EquivalenceCheck:
    """
    Per-group comparison row.
    按组比较结果行。

    Attributes:
        i: 1-based group index.
        i: 从 1 开始的组序号。
        N_ratio: N_i / N_i'.
        N_ratio: N_i / N_i'。
        R_ratio: R_i' / R_i.
        R_ratio: R_i' / R_i。
        target: (M'/M)^gamma, the required N ratio.
        target: 所需的 N 比值 (M'/M)^gamma。
        passed: Whether both ratio conditions hold.
        passed: 两个比值条件是否都成立。
    """

    i: int
    N_ratio: float
    R_ratio: float
    target: float
    passed: bool


@dataclass(frozen=True, slots=True)
class EquivalenceReport:
    """
    Equivalence decision with its evidence.
    等价性判定及其依据。

    Attributes:
        decision: Decision.
        decision: 判定结果。
        common_grid: (m, n) of the common grid, if any.
        common_grid: 公共网格 (m, n)（如有）。
        checks: Per-group checks.
        checks: 按组检查。
    """

    decision: EquivalenceDecision
    common_grid: tuple[int, int] | None = None
    checks: list[EquivalenceCheck] = field(default_factory=list)


def equivalent_intdim(a: CarpetSpec, b: CarpetSpec, *, config: FractalConfig | None = None) -> EquivalenceReport:
    """
    Decide whether two carpets share their intermediate-dimension curve.
    判定两个载毯是否具有相同的中间维数曲线。

    Both carpets are lifted to a common grid; then the group counts must agree, every N_i/N_i'
    equal (M'/M)^gamma and every R_i'/R_i equal M'/M (exact integers).
    两个载毯先提升到公共网格；随后要求组数相同、N_i/N_i' 等于 (M'/M)^gamma、R_i'/R_i 等于 M'/M（精确整数）。

    Args:
        a: First carpet.
        a: 第一个载毯。
        b: Second carpet.
        b: 第二个载毯。
        config: Numerical configuration.
        config: 数值配置。

    Returns:
        EquivalenceReport: Decision and checks.
        EquivalenceReport: 判定与检查明细。

    Raises:
        DomainError: A carpet has uniform fibres.
        DomainError: 有载毯为均匀纤维。
    """
    cfg = config or resolve_config()
    pa, pb = profile(a), profile(b)
    if pa.uniform_fibres or pb.uniform_fibres:
        raise DomainError(
            message="Equivalence test requires non-uniform fibres / 等价性检验要求非均匀纤维",
            error_code="uniform_fibres",
        )
    reduction = same_grid_reduction(a, b, config=cfg)
    if reduction.exponents is None:
        return EquivalenceReport(decision=EquivalenceDecision.INCOMPARABLE_GRIDS)
    k_a, k_b = reduction.exponents
    pa, pb = iterate_profile(pa, k_a, config=cfg), iterate_profile(pb, k_b, config=cfg)
    grid = (pa.m, pa.n)
    target_log = pa.gamma * math.log(pb.M / pa.M)
    checks: list[EquivalenceCheck] = []
    for idx, ((na, ra), (nb, rb)) in enumerate(zip(pa.groups, pb.groups, strict=False), start=1):
        diff = math.log(na) - math.log(nb) - target_log
        passed = abs(diff) <= cfg.equivalence_tol and rb * pa.M == ra * pb.M
        if not passed and abs(diff) <= 1e3 * cfg.equivalence_tol:
            warnings.warn(
                f"Group {idx}: log-ratio mismatch {diff:.3e} is a near-miss / 第 {idx} 组对数比接近阈值",
                stacklevel=2,
            )
        checks.append(
            EquivalenceCheck(i=idx, N_ratio=na / nb, R_ratio=rb / ra, target=math.exp(target_log), passed=passed)
        )
    ok = pa.M0 == pb.M0 and all(c.passed for c in checks)
    decision = EquivalenceDecision.EQUIVALENT if ok else EquivalenceDecision.INEQUIVALENT
    logger.info("equivalence on %dx%d grid: %s", grid[0], grid[1], decision)
    return EquivalenceReport(decision=decision, common_grid=grid, checks=checks)


def holder_bound(curve_a: SampledCurve, curve_b: SampledCurve) -> tuple[float, float]:
    """
    Upper bound on the Holder exponent of a surjection from set A onto set B.
    从集合 A 到集合 B 的满射的 Holder 指数上界。

    alpha <= dim_theta A / dim_theta B for every theta; the bound is the sampled minimum.
    对所有 theta 有 alpha <= dim_theta A / dim_theta B；上界取采样最小值。

    Args:
        curve_a: Curve of the domain set.
        curve_a: 定义域集合的曲线。
        curve_b: Curve of the image set.
        curve_b: 像集合的曲线。

    Returns:
        tuple[float, float]: (theta_star, bound).
        tuple[float, float]: (theta_star, 上界)。

    Raises:
        GridMismatchError: Curves sampled on different grids.
        GridMismatchError: 曲线采样网格不同。
    """
    ta, tb = np.asarray(curve_a.thetas), np.asarray(curve_b.thetas)
    if ta.shape != tb.shape or not np.array_equal(ta, tb):
        raise GridMismatchError(message="Curves use different theta grids / 曲线的 theta 网格不同", error_code="grid_mismatch")
    vb = np.asarray(curve_b.values, dtype=float)
    if np.any(vb <= 0):
        raise DomainError(message="Target curve must be positive / 目标曲线必须为正", error_code="holder_domain")
    ratio = np.asarray(curve_a.values, dtype=float) / vb
    idx = int(np.argmin(ratio))
    return float(ta[idx]), float(ratio[idx])
