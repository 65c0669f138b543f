"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: rate_function.py
@DateTime: 2026-10-17
@Docs: Large-deviations rate function of the column log-counts.
列计数对数的大偏差速率函数。

For the uniform column distribution the log moment generating function is
Lambda(lam) = log((1/M) sum_j N_j^lam) and I(t) = sup_lam (lam*t - Lambda(lam)).
在均匀列分布下，对数矩母函数为 Lambda(lam) = log((1/M) sum_j N_j^lam)，
I(t) = sup_lam (lam*t - Lambda(lam))。
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.optimize import root_scalar
from scipy.special import logsumexp, softmax
from scipy.stats import entropy

from fractal_intdim.carpet_model import ColumnProfile
from fractal_intdim.config import FractalConfig, resolve_config
from fractal_intdim.exceptions import DomainError, RootSearchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RateFn:
    """
    Rate function evaluator bound to a column profile.
    绑定到列统计的速率函数求值器。

    Attributes:
        profile: Column profile.
        profile: 列统计。
        config: Numerical configuration.
        config: 数值配置。
    """

    profile: ColumnProfile
    config: FractalConfig = field(default_factory=resolve_config)

    @property
    def t_max(self) -> float:
        """max_i log N_i / 最大 log N_i。"""
        return self.profile.t_max

    def _weights(self) -> tuple[np.ndarray, np.ndarray]:
        return self.profile.group_logs, self.profile.group_mult

    def log_mgf(self, lam: float) -> float:
        """
        Lambda(lam) = log((1/M) sum_j N_j^lam), shifted log-sum-exp.
        Lambda(lam) = log((1/M) sum_j N_j^lam)，平移 log-sum-exp。
        """
        a, r = self._weights()
        return float(logsumexp(lam * a, b=r)) - math.log(self.profile.M)

    def mean_map(self, lam: float) -> float:
        """
        Mean of log N under the tilted distribution; strictly increasing in lam.
        倾斜分布下 log N 的均值，关于 lam 严格递增。
        """
        a, r = self._weights()
        q = softmax(lam * a + np.log(r))
        return float(q @ a)


def _check_domain(rf: RateFn, t: float, *, allow_t_max: bool = False) -> None:
    """
    Validate t against [t_low, t_max).
    校验 t 是否位于 [t_low, t_max)。
    """
    p = rf.profile
    tol = rf.config.lambda_tol
    if p.uniform_fibres:
        if abs(t - p.t_low) > tol:
            raise DomainError(
                message=f"Uniform fibres: rate function only defined at t={p.t_low} / 均匀纤维仅在 t_low 处有定义",
                details={"t": t, "t_low": p.t_low},
                error_code="rate_domain",
            )
        return
    if t < p.t_low - tol:
        raise DomainError(
            message=f"t={t} below t_low={p.t_low} / t 低于 t_low",
            details={"t": t, "t_low": p.t_low},
            error_code="rate_domain",
        )
    if t > p.t_max or (t == p.t_max and not allow_t_max):
        raise DomainError(
            message=f"t={t} at or beyond t_max={p.t_max}: derivative diverges / 导数发散",
            details={"t": t, "t_max": p.t_max},
            error_code="rate_diverges",
        )


@lru_cache(maxsize=8192)
def _solve_lambda(profile: ColumnProfile, config: FractalConfig, t: float) -> float:
    """
    Brent root of mean_map(lam) = t inside a doubling bracket, memoized per (profile, config, t).
    在倍增区间内用 Brent 法求 mean_map(lam) = t 的根，按 (profile, config, t) 缓存。
    """
    rf = RateFn(profile=profile, config=config)
    lo, hi = 0.0, 1.0
    while rf.mean_map(hi) < t:
        lo, hi = hi, 2.0 * hi
        if hi > 2.0**60:
            raise RootSearchError(
                message=f"Cannot bracket lambda for t={t} / 无法定位 lambda 区间",
                details={"t": t},
                error_code="lambda_bracket",
            )
    try:
        sol = root_scalar(
            lambda lam: rf.mean_map(lam) - t,
            bracket=(lo, hi),
            method="brentq",
            xtol=config.lambda_tol,
            maxiter=config.max_bisect_iter,
        )
    except (RuntimeError, ValueError) as exc:
        raise RootSearchError(
            message=f"lambda iteration did not converge for t={t} / lambda 迭代未收敛",
            details={"t": t, "bracket": [lo, hi], "reason": str(exc)},
            error_code="lambda_convergence",
        ) from exc
    if not sol.converged:
        raise RootSearchError(
            message=f"lambda iteration did not converge for t={t} / lambda 迭代未收敛",
            details={"t": t, "bracket": [lo, hi], "flag": sol.flag},
            error_code="lambda_convergence",
        )
    return float(sol.root)


def lambda_of_t(rf: RateFn, t: float) -> float:
    """
    Invert the mean map: the unique lam >= 0 with mean_map(lam) = t.
    反演均值映射：满足 mean_map(lam) = t 的唯一 lam >= 0。

    Brent root search inside a doubling bracket [0, lam_hi].
    在倍增区间 [0, lam_hi] 内进行 Brent 求根。

    Args:
        rf: Rate function.
        rf: 速率函数。
        t: Target mean in [t_low, t_max).
        t: 目标均值，位于 [t_low, t_max)。

    Returns:
        float: lam(t) = I'(t).
        float: lam(t) = I'(t)。

    Raises:
        DomainError: t outside the domain.
        DomainError: t 超出定义域。
        RootSearchError: Bracket or iteration failure.
        RootSearchError: 区间或迭代失败。
    """
    _check_domain(rf, t)
    p = rf.profile
    if p.uniform_fibres or t <= p.t_low:
        return 0.0
    return _solve_lambda(p, rf.config, float(t))


def rate_derivative(rf: RateFn, t: float) -> float:
    """
    I'(t), equal to lam(t).
    I'(t)，等于 lam(t)。
    """
    return lambda_of_t(rf, t)


def rate_I(rf: RateFn, t: float) -> float:
    """
    Evaluate I(t) on [t_low, t_max].
    在 [t_low, t_max] 上计算 I(t)。

    Args:
        rf: Rate function.
        rf: 速率函数。
        t: Argument.
        t: 自变量。

    Returns:
        float: I(t); at t_max the closed form log M - log #{columns with maximal count}.
        float: I(t)；在 t_max 处取闭式 log M - log #{最大计数列}。
    """
    _check_domain(rf, t, allow_t_max=True)
    p = rf.profile
    if p.uniform_fibres:
        return 0.0
    if t == p.t_max:
        return math.log(p.M) - math.log(p.groups[0][1])
    lam = lambda_of_t(rf, t)
    if lam == 0.0:
        return 0.0
    return lam * t - rf.log_mgf(lam)


def entropy_max_vector(rf: RateFn, t: float) -> np.ndarray:
    """
    Entropy-maximizing column distribution with mean log-count t.
    列计数对数均值为 t 的最大熵列分布。

    Args:
        rf: Rate function.
        rf: 速率函数。
        t: Mean log-count in [t_low, t_max).
        t: 列计数对数均值，位于 [t_low, t_max)。

    Returns:
        np.ndarray: q_j proportional to N_j^lam(t), in profile column order.
        np.ndarray: q_j 正比于 N_j^lam(t)，按列统计顺序。
    """
    lam = lambda_of_t(rf, t)
    return softmax(lam * rf.profile.log_counts)


def kl_identity_check(rf: RateFn, p: np.ndarray | list[float]) -> float:
    """
    Residual of H(p||P) = H(p||Q) + log(N/M) - t with Q uniform and t the p-mean.
    H(p||P) = H(p||Q) + log(N/M) - t 的残差，其中 Q 为均匀分布，t 为 p 下的均值。

    Args:
        rf: Rate function.
        rf: 速率函数。
        p: Probability vector over the M columns.
        p: M 列上的概率向量。

    Returns:
        float: Absolute residual.
        float: 绝对残差。

    Raises:
        DomainError: p is not a probability vector of length M.
        DomainError: p 不是长度为 M 的概率向量。
    """
    prof = rf.profile
    vec = np.asarray(p, dtype=float)
    if vec.shape != (prof.M,) or np.any(vec < 0) or abs(vec.sum() - 1.0) > 1e-12:
        raise DomainError(
            message="p must be a probability vector over the columns / p 必须是列上的概率向量",
            details={"p": vec.tolist()},
            error_code="bad_probability",
        )
    counts = np.asarray(prof.counts, dtype=float)
    t = float(vec @ prof.log_counts)
    big_p = counts / prof.N
    q = np.full(prof.M, 1.0 / prof.M)
    return abs(float(entropy(vec, big_p)) - float(entropy(vec, q)) - math.log(prof.N / prof.M) + t)


def pressure_window(p: ColumnProfile) -> tuple[float, float]:
    """
    (s_low, s_high): the s-range whose t = (s - log M/log m) log n lies in [t_low, t_high].
    (s_low, s_high)：使 t = (s - log M/log m) log n 落在 [t_low, t_high] 的 s 区间。
    """
    base = math.log(p.M) / math.log(p.m)
    ln = math.log(p.n)
    return base + p.t_low / ln, base + p.t_high / ln


def t_of_s(p: ColumnProfile, s: float) -> float:
    """t = (s - log M/log m) * log n."""
    return (s - math.log(p.M) / math.log(p.m)) * math.log(p.n)


def pressure_identity(rf: RateFn, s: float) -> tuple[float, tuple[float, float]]:
    """
    Pressure P(s) = log M - I(t) and the residuals of its two alternative forms.
    压力 P(s) = log M - I(t) 及其两种等价形式的残差。

    Args:
        rf: Rate function.
        rf: 速率函数。
        s: Exponent in the open window (s_low, s_high); the endpoints are rejected.
        s: 指数，位于开区间 (s_low, s_high)；端点被拒绝。

    Returns:
        tuple: (P(s), (|P - H(Q*_t)|, |P - (log m f(alpha(t)) - t/gamma)|)).
        tuple: (P(s), (|P - H(Q*_t)|, |P - (log m f(alpha(t)) - t/gamma)|))。

    Raises:
        DomainError: s at an endpoint of the window or outside it.
        DomainError: s 位于窗口端点或窗口之外。
    """
    from fractal_intdim.spectra_equivalence import multifractal_spectrum

    p = rf.profile
    s_low, s_high = pressure_window(p)
    if not (s_low < s < s_high):
        raise DomainError(
            message=f"s={s} outside ({s_low}, {s_high}) / s 超出压力开窗口",
            details={"s": s, "s_low": s_low, "s_high": s_high},
            error_code="pressure_domain",
        )
    t = t_of_s(p, s)
    value = math.log(p.M) - rate_I(rf, t)
    h_q = float(entropy(entropy_max_vector(rf, t)))
    log_m, log_n = math.log(p.m), math.log(p.n)
    alpha = math.log(p.N) / log_m - (1.0 / log_m - 1.0 / log_n) * t
    spectral = log_m * multifractal_spectrum(p, alpha, config=rf.config) - t / p.gamma
    logger.debug("pressure s=%.12g t=%.12g P=%.12g", s, t, value)
    return value, (abs(value - h_q), abs(value - spectral))
