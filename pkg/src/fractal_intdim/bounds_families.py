"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: bounds_families.py
@DateTime: 2026-10-17
@Docs: General intermediate-dimension bounds, the Dini class H(lambda, alpha) and closed-form families.
通用中间维数界、Dini 类 H(lambda, alpha) 与闭式族。

Families / 族:
        - lattice: d*theta/(p + theta) (sequences are d = 1).
        - popcorn pyramids: d - 1 up to theta = (d-1)t/d, then d^2 theta/(d theta + t).
        - infinitely generated similarity systems: max{h, dim_theta P} with P the fixed points.
        - continued-fraction sets: max{h, theta/(p + theta)} (real), max{h, 2 theta/(p + theta)} (complex).
"""

import logging
import math
import warnings
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any

import numpy as np
from scipy.optimize import bisect
from scipy.special import zeta

from fractal_intdim.exceptions import DomainError

logger = logging.getLogger(__name__)

_CHECK_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class HSpec:
    """
    Sampled prescription h on [0, 1] with its class parameters.
    [0, 1] 上的采样函数 h 及其类参数。

    Attributes:
        lam: Lower parameter lambda.
        lam: 下参数 lambda。
        alpha: Upper parameter alpha.
        alpha: 上参数 alpha。
        thetas: Strictly increasing grid in [0, 1] ending at 1.
        thetas: [0, 1] 中严格递增且以 1 结尾的网格。
        values: h on the grid, inside [lambda, alpha].
        values: 网格上的 h 值，位于 [lambda, alpha]。
    """

    lam: float
    alpha: float
    thetas: tuple[float, ...]
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        th, vals = self.thetas, self.values
        if not 0.0 <= self.lam <= self.alpha:
            raise DomainError(
                message=f"Need 0 <= lambda <= alpha, got ({self.lam}, {self.alpha}) / 需要 0 <= lambda <= alpha",
                error_code="bad_hspec",
            )
        if len(th) != len(vals) or len(th) < 3:
            raise DomainError(message="h-spec needs >= 3 paired samples / h 规格至少需要 3 个样本", error_code="bad_hspec")
        if any(b <= a for a, b in zip(th, th[1:], strict=False)) or th[0] < 0.0 or th[-1] != 1.0:
            raise DomainError(
                message="theta grid must be strictly increasing in [0, 1] and end at 1 / theta 网格须严格递增并以 1 结尾",
                details={"thetas": list(th)},
                error_code="bad_hspec",
            )
        if any(v < self.lam - _CHECK_TOL or v > self.alpha + _CHECK_TOL for v in vals):
            raise DomainError(
                message="h values must lie in [lambda, alpha] / h 值须位于 [lambda, alpha]",
                details={"values": list(vals)},
                error_code="bad_hspec",
            )

    @classmethod
    def sample(cls, fn: Any, *, lam: float, alpha: float, count: int = 201, start: float = 0.0) -> "HSpec":
        """
        Sample a callable on a uniform grid over [start, 1].
        在 [start, 1] 的均匀网格上采样可调用对象。
        """
        grid = np.linspace(start, 1.0, count)
        grid[-1] = 1.0
        return cls(lam=lam, alpha=alpha, thetas=tuple(float(t) for t in grid), values=tuple(float(fn(t)) for t in grid))

    def __call__(self, theta: float) -> float:
        """Linear interpolation of the samples / 样本的线性插值。"""
        return float(np.interp(theta, self.thetas, self.values))


@dataclass(frozen=True, slots=True)
class ClassReport:
    """
    Result of a class check.
    类检查结果。

    Attributes:
        passed: True when no violation was found.
        passed: 未发现违例时为 True。
        violations: (theta, phi, excess) per violating pair, first one first.
        violations: 每个违例对的 (theta, phi, 超出量)，按出现顺序。
    """

    passed: bool
    violations: list[tuple[float, float, float]] = field(default_factory=list)

    @property
    def first_violation(self) -> tuple[float, float, float] | None:
        return self.violations[0] if self.violations else None


def two_point_upper_bound(lam: float, alpha: float, theta: float, h_theta: float, phi: float) -> float:
    """
    Upper bound on h(phi) from h(theta), for 0 < theta <= phi <= 1.
    由 h(theta) 得到的 h(phi) 上界（0 < theta <= phi <= 1）。

    Args:
        lam: lambda.
        lam: lambda。
        alpha: alpha.
        alpha: alpha。
        theta: Smaller parameter.
        theta: 较小参数。
        h_theta: h(theta) in [lambda, alpha].
        h_theta: h(theta)，位于 [lambda, alpha]。
        phi: Larger parameter.
        phi: 较大参数。

    Returns:
        float: h + (h - lam)(alpha - h)(phi - theta) / (phi (h - lam) + theta (alpha - h)); h itself when lam = alpha.
        float: 上界；lam = alpha 时返回 h 本身。
    """
    if not 0.0 < theta <= phi <= 1.0:
        raise DomainError(
            message=f"Need 0 < theta <= phi <= 1, got ({theta}, {phi}) / 需要 0 < theta <= phi <= 1",
            error_code="bound_domain",
        )
    if lam == alpha:
        return h_theta
    lo, hi = h_theta - lam, alpha - h_theta
    den = phi * lo + theta * hi
    if den == 0.0:
        return h_theta
    return h_theta + lo * hi * (phi - theta) / den


def lower_bound_from_larger_theta(lam: float, alpha: float, h_phi: float, theta: float, phi: float) -> float:
    """
    Lower bound on h(theta) from h(phi), for 0 < theta <= phi <= 1.
    由 h(phi) 得到的 h(theta) 下界（0 < theta <= phi <= 1）。

    Returns:
        float: (alpha theta (h - lam) + phi lam (alpha - h)) / (theta (h - lam) + phi (alpha - h)).
        float: 下界。

    Raises:
        DomainError: Degenerate lam = alpha.
        DomainError: lam = alpha 退化情形。
    """
    if not 0.0 < theta <= phi <= 1.0:
        raise DomainError(
            message=f"Need 0 < theta <= phi <= 1, got ({theta}, {phi}) / 需要 0 < theta <= phi <= 1",
            error_code="bound_domain",
        )
    if lam == alpha:
        raise DomainError(message="Degenerate class lambda = alpha / 退化类 lambda = alpha", error_code="degenerate_class")
    lo, hi = h_phi - lam, alpha - h_phi
    return (alpha * theta * lo + phi * lam * hi) / (theta * lo + phi * hi)


def hclass_check(spec: HSpec) -> ClassReport:
    """
    Check monotonicity and the integrated Dini bound on adjacent samples.
    检查单调性及相邻样本上的积分形式 Dini 界。

    Pairs starting at theta = 0 only enter the monotonicity test.
    起点为 theta = 0 的样本对只参与单调性检验。

    Args:
        spec: Sampled prescription.
        spec: 采样函数。

    Returns:
        ClassReport: Pass flag and violations.
        ClassReport: 通过标志与违例列表。
    """
    violations: list[tuple[float, float, float]] = []
    pairs = zip(spec.thetas, spec.thetas[1:], spec.values, spec.values[1:], strict=False)
    for theta, phi, h_t, h_p in pairs:
        if h_p < h_t - _CHECK_TOL:
            violations.append((theta, phi, h_t - h_p))
            continue
        if theta == 0.0:
            continue
        excess = h_p - two_point_upper_bound(spec.lam, spec.alpha, theta, h_t, phi)
        if excess > _CHECK_TOL:
            violations.append((theta, phi, excess))
    if violations:
        logger.debug("h-class check: %d violations, first at theta=%.6g", len(violations), violations[0][0])
    return ClassReport(passed=not violations, violations=violations)


def lipschitz_constant(lam: float, alpha: float, theta: float) -> float:
    """Lipschitz constant (alpha - lam)/(4 theta) of every h in H(lam, alpha) on [theta, 1]."""
    if not 0.0 < theta <= 1.0:
        raise DomainError(message=f"theta={theta} outside (0, 1] / theta 超出 (0, 1]", error_code="bound_domain")
    return (alpha - lam) / (4.0 * theta)


def starshape_check(thetas: Sequence[float], values: Sequence[float]) -> ClassReport:
    """
    Check that value/theta strictly decreases over positive samples.
    检查正样本上 value/theta 严格递减。
    """
    pts = [(float(t), float(v)) for t, v in zip(thetas, values, strict=True) if t > 0]
    violations = [
        (t0, t1, v1 / t1 - v0 / t0) for (t0, v0), (t1, v1) in zip(pts, pts[1:], strict=False) if v1 / t1 >= v0 / t0
    ]
    return ClassReport(passed=not violations, violations=violations)


def _check_unit(theta: float) -> None:
    if not 0.0 <= theta <= 1.0:
        raise DomainError(message=f"theta={theta} outside [0, 1] / theta 超出 [0, 1]", error_code="theta_domain")


def lattice_dim(p: float, d: int, theta: float) -> float:
    """
    Intermediate dimensions d*theta/(p + theta) of the inverted lattice.
    反演格点集的中间维数 d*theta/(p + theta)。
    """
    if p <= 0 or d < 1:
        raise DomainError(message=f"Need p > 0 and d >= 1, got ({p}, {d}) / 参数无效", error_code="family_params")
    _check_unit(theta)
    return d * theta / (p + theta)


@dataclass(frozen=True, slots=True)
class PopcornDims:
    """
    Dimensions of a popcorn pyramid graph.
    爆米花金字塔图的维数。

    Attributes:
        intermediate: dim_theta.
        intermediate: dim_theta。
        box: Box dimension.
        box: 盒维数。
        assouad: Assouad dimension.
        assouad: Assouad 维数。
    """

    intermediate: float
    box: float
    assouad: float


def popcorn_dims(t: float, d: int, theta: float) -> PopcornDims:
    """
    Intermediate, box and Assouad dimensions of the popcorn pyramid graph with parameters (t, d).
    参数为 (t, d) 的爆米花金字塔图的中间维数、盒维数与 Assouad 维数。

    Args:
        t: Exponent t > 0.
        t: 指数 t > 0。
        d: Ambient dimension d >= 2.
        d: 环境维数 d >= 2。
        theta: theta in [0, 1].
        theta: theta，位于 [0, 1]。

    Returns:
        PopcornDims: The three dimensions.
        PopcornDims: 三种维数。
    """
    if t <= 0 or d < 2:
        raise DomainError(message=f"Need t > 0 and d >= 2, got ({t}, {d}) / 参数无效", error_code="family_params")
    _check_unit(theta)
    if t >= d / (d - 1):
        flat = float(d - 1)
        return PopcornDims(intermediate=flat, box=flat, assouad=flat)
    if theta <= (d - 1) * t / d:
        inter = float(d - 1)
    else:
        inter = d * d * theta / (d * theta + t)
    return PopcornDims(intermediate=inter, box=d * d / (d + t), assouad=float(d))


def popcorn_holder_bound(t1: float, t2: float, d: int) -> tuple[float, float]:
    """
    Best Holder exponent bound for a map from the t2 popcorn graph onto the t1 one.
    从 t2 爆米花图映到覆盖 t1 爆米花图的映射的最佳 Holder 指数上界。

    Returns:
        tuple[float, float]: (theta, ((d-1) t2 + t1)/(d t2)) with theta = (d-1) t2/d.
        tuple[float, float]: (theta, 上界)，theta = (d-1) t2/d。
    """
    if d < 2 or not 0.0 < t1 < t2 <= d / (d - 1):
        raise DomainError(
            message=f"Need 0 < t1 < t2 <= d/(d-1), got ({t1}, {t2}, {d}) / 参数无效",
            error_code="family_params",
        )
    theta = (d - 1) * t2 / d
    return theta, ((d - 1) * t2 + t1) / (d * t2)


class SimilarityKind(StrEnum):
    """Contraction-ratio rule / 压缩比规则。"""

    POWER = "power"
    GEOMETRIC = "geometric"
    EXPLICIT = "explicit"


class FixedPointKind(StrEnum):
    """Closed-form fixed-point family / 闭式不动点族。"""

    SEQUENCE = "sequence"
    LATTICE = "lattice"


@dataclass(frozen=True, slots=True)
class FixedPointFamily:
    """
    Fixed-point set with a closed-form intermediate-dimension curve.
    中间维数曲线具有闭式的不动点集。

    Attributes:
        kind: sequence (d = 1) or lattice.
        kind: sequence（d = 1）或 lattice。
        p: Exponent p > 0.
        p: 指数 p > 0。
        d: Ambient dimension of the lattice.
        d: 格点的环境维数。
    """

    kind: FixedPointKind
    p: float
    d: int = 1

    def dim(self, theta: float) -> float:
        """dim_theta of the fixed-point set / 不动点集的 dim_theta。"""
        d = 1 if self.kind is FixedPointKind.SEQUENCE else self.d
        return lattice_dim(self.p, d, theta)


@dataclass(frozen=True, slots=True)
class SimilarityFamily:
    """
    Countable family of similarity contraction ratios.
    可数个相似压缩比构成的族。

    Attributes:
        kind: power (c_i = a i^-q), geometric (c_i = c rho^i) or explicit (list plus geometric tail).
        kind: power、geometric 或 explicit（列表加几何尾部）。
        a: Power-rule scale.
        a: 幂律尺度。
        q: Power-rule exponent.
        q: 幂律指数。
        c: Geometric scale.
        c: 几何尺度。
        rho: Geometric ratio.
        rho: 几何公比。
        ratios: Explicit leading ratios.
        ratios: 显式的前若干压缩比。
        multiplicity: Number of maps sharing each ratio.
        multiplicity: 共享每个压缩比的映射数。
        fixed_points: Closed-form fixed-point family, if known.
        fixed_points: 已知时的闭式不动点族。
    """

    kind: SimilarityKind
    a: float = 0.0
    q: float = 0.0
    c: float = 0.0
    rho: float = 0.0
    ratios: tuple[float, ...] = ()
    multiplicity: int = 1
    fixed_points: FixedPointFamily | None = None

    def __post_init__(self) -> None:
        ok = self.multiplicity >= 1
        if self.kind is SimilarityKind.POWER:
            ok = ok and 0.0 < self.a < 1.0 and self.q > 0.0
        elif self.kind is SimilarityKind.GEOMETRIC:
            ok = ok and self.c > 0.0 and 0.0 < self.rho < 1.0 and self.c * self.rho < 1.0
        else:
            has_tail = self.c > 0.0
            ok = ok and bool(self.ratios) and all(0.0 < r < 1.0 for r in self.ratios)
            ok = ok and (not has_tail or (0.0 < self.rho < 1.0 and self.c * self.rho < 1.0))
        if not ok:
            raise DomainError(
                message=f"Invalid {self.kind} similarity family / 相似族参数无效",
                details={"kind": str(self.kind)},
                error_code="family_params",
            )

    def with_multiplicity(self, multiplicity: int) -> "SimilarityFamily":
        """Copy with another multiplicity / 以新的重数复制。"""
        return SimilarityFamily(
            kind=self.kind,
            a=self.a,
            q=self.q,
            c=self.c,
            rho=self.rho,
            ratios=self.ratios,
            multiplicity=multiplicity,
            fixed_points=self.fixed_points,
        )

    def series(self, t: float) -> float:
        """
        sum_i c_i^t (math.inf when divergent).
        sum_i c_i^t（发散时为 math.inf）。
        """
        if t <= finiteness_parameter(self):
            return math.inf
        if self.kind is SimilarityKind.POWER:
            total = self.a**t * float(zeta(self.q * t, 1.0))
        else:
            head = sum(r**t for r in self.ratios)
            tail = 0.0
            if self.c > 0.0:
                rt = self.rho**t
                tail = self.c**t * rt / (1.0 - rt)
            total = head + tail
        return self.multiplicity * total


def finiteness_parameter(fam: SimilarityFamily) -> float:
    """
    inf{t > 0 : sum_i c_i^t < infinity}: 1/q for the power rule, 0 otherwise.
    inf{t > 0 : sum_i c_i^t < infinity}：幂律为 1/q，其余为 0。
    """
    return 1.0 / fam.q if fam.kind is SimilarityKind.POWER else 0.0


def similarity_h(fam: SimilarityFamily, spatial_dim: int, *, tol: float = 1e-10) -> float:
    """
    h = inf{t > 0 : sum_i c_i^t < 1}.
    h = inf{t > 0 : sum_i c_i^t < 1}。

    The sum decreases in t and diverges at the finiteness parameter, so h is its level-1 crossing.
    级数关于 t 递减且在有限性参数处发散，因此 h 为其等于 1 的点。

    Args:
        fam: Similarity family.
        fam: 相似族。
        spatial_dim: Dimension of the ambient space.
        spatial_dim: 环境空间维数。
        tol: Bisection tolerance.
        tol: 二分容差。

    Returns:
        float: h, or spatial_dim with a warning when the sum never drops below 1 there.
        float: h；若级数在该区间内从未小于 1，则告警并返回 spatial_dim。
    """
    lo = finiteness_parameter(fam)
    hi = float(spatial_dim)
    if lo >= hi or fam.series(hi) >= 1.0:
        warnings.warn(
            f"Similarity sum does not drop below 1 on (0, {spatial_dim}]; h >= {spatial_dim} / 相似和未降到 1 以下",
            stacklevel=2,
        )
        return hi

    def f(t: float) -> float:
        value = fam.series(t)
        return math.inf if math.isinf(value) else math.log(value)

    # Start just above the divergence point, stepping down in width until the sum exceeds 1
    left = lo + (hi - lo) * 0.5
    step = (hi - lo) * 0.5
    while f(left) < 0.0:
        step *= 0.5
        left = lo + step
        if step < tol:
            return lo
    return float(bisect(f, left, hi, xtol=tol, maxiter=200))


def cifs_intdim(h: float, family: FixedPointFamily, theta: float) -> float:
    """
    Upper intermediate dimension max{h, dim_theta P} of the limit set.
    极限集的上中间维数 max{h, dim_theta P}。
    """
    if h < 0:
        raise DomainError(message=f"h must be >= 0, got {h} / h 必须非负", error_code="family_params")
    return max(h, family.dim(theta))


def cifs_intdim_bounds(h: float, family: FixedPointFamily, theta: float) -> tuple[float, float]:
    """
    (lower, upper) bounds max{h, lower dim_theta P} and max{h, upper dim_theta P}.
    下界与上界 max{h, 下 dim_theta P}、max{h, 上 dim_theta P}。

    For the supported families (the sequence {i^-p} and the lattice points {i^-p} in d dimensions) the lower and
    upper intermediate dimensions of P coincide at every theta, so lower == upper is returned for every input.
    A fixed-point set whose lower and upper curves differ is not representable by FixedPointFamily.
    对所支持的族（序列 {i^-p} 与 d 维格点 {i^-p}），P 的下、上中间维数在每个 theta 处相等，
    因此对任意输入都返回 lower == upper。上下曲线不同的不动点集无法用 FixedPointFamily 表示。
    """
    value = cifs_intdim(h, family, theta)
    return value, value


def similarity_intdim(fam: SimilarityFamily, spatial_dim: int, theta: float) -> float:
    """
    max{h, dim_theta P} for a similarity family with known fixed points.
    已知不动点的相似族的 max{h, dim_theta P}。
    """
    if fam.fixed_points is None:
        raise DomainError(message="Family has no fixed-point curve / 该族没有不动点曲线", error_code="family_params")
    return cifs_intdim(similarity_h(fam, spatial_dim), fam.fixed_points, theta)


def ctdfrac_finiteness(p: float, kind: str) -> float:
    """
    Finiteness parameter of the continued-fraction system with entries near n^p.
    元素接近 n^p 的连分数系统的有限性参数。

    Returns:
        float: 1/(2p) for real, 1/p for complex.
        float: 实数为 1/(2p)，复数为 1/p。
    """
    if p <= 1:
        raise DomainError(message=f"Need p > 1, got {p} / 需要 p > 1", error_code="family_params")
    if kind == "real":
        return 1.0 / (2.0 * p)
    if kind == "complex":
        return 1.0 / p
    raise DomainError(message=f"Unknown continued-fraction kind {kind!r} / 未知连分数类型", error_code="family_params")


def ctdfrac_dim(p: float, h: float, kind: str, theta: float) -> float:
    """max{h, theta/(p+theta)} (real) or max{h, 2 theta/(p+theta)} (complex)."""
    ctdfrac_finiteness(p, kind)
    d = 1 if kind == "real" else 2
    return cifs_intdim(h, FixedPointFamily(kind=FixedPointKind.LATTICE, p=p, d=d), theta)


@dataclass(frozen=True, slots=True)
class HolderReport:
    """
    Holder exponent bounds from three kinds of dimension.
    三类维数给出的 Holder 指数上界。

    Attributes:
        theta_star: theta achieving the intermediate bound.
        theta_star: 取得中间维数界的 theta。
        intermediate_bound: Bound from dim_theta.
        intermediate_bound: 来自 dim_theta 的上界。
        hausdorff_bound: Bound from Hausdorff dimensions.
        hausdorff_bound: 来自 Hausdorff 维数的上界。
        box_bound: Bound from box dimensions.
        box_bound: 来自盒维数的上界。
    """

    theta_star: float
    intermediate_bound: float
    hausdorff_bound: float
    box_bound: float


def ctdfrac_holder_bound(p: float, q: float, h_p: float, h_q: float) -> HolderReport:
    """
    Holder bounds for a map from the q continued-fraction set onto a set containing the p one.
    从 q 连分数集映到包含 p 连分数集的映射的 Holder 上界。

    Args:
        p: Smaller exponent, 1 < p < q < 2p - 1.
        p: 较小指数，1 < p < q < 2p - 1。
        q: Larger exponent.
        q: 较大指数。
        h_p: Hausdorff dimension of the p set, in (1/(2p), 1/(q+1)).
        h_p: p 集的 Hausdorff 维数，位于 (1/(2p), 1/(q+1))。
        h_q: Hausdorff dimension of the q set, in (p h_p/(q - q h_p + p h_p), 1/(q+1)).
        h_q: q 集的 Hausdorff 维数。

    Returns:
        HolderReport: Bounds; the intermediate one is (p - p h_q + q h_q)/q at theta = q h_q/(1 - h_q).
        HolderReport: 各上界；中间维数界为 (p - p h_q + q h_q)/q，取于 theta = q h_q/(1 - h_q)。
    """
    if not 1.0 < p < q < 2.0 * p - 1.0:
        raise DomainError(message=f"Need 1 < p < q < 2p - 1, got ({p}, {q}) / 参数无效", error_code="family_params")
    if not 1.0 / (2.0 * p) < h_p < 1.0 / (q + 1.0):
        raise DomainError(message=f"h_p={h_p} outside (1/(2p), 1/(q+1)) / h_p 超出范围", error_code="family_params")
    floor_q = p * h_p / (q - q * h_p + p * h_p)
    if not floor_q < h_q < 1.0 / (q + 1.0):
        raise DomainError(
            message=f"h_q={h_q} outside ({floor_q}, {1.0 / (q + 1.0)}) / h_q 超出范围", error_code="family_params"
        )
    return HolderReport(
        theta_star=q * h_q / (1.0 - h_q),
        intermediate_bound=(p - p * h_q + q * h_q) / q,
        hausdorff_bound=h_q / h_p,
        box_bound=(p + 1.0) / (q + 1.0),
    )


class FamilyKind(StrEnum):
    """Closed-form curve selector / 闭式曲线选择器。"""

    LATTICE = "lattice"
    SEQUENCE = "sequence"
    POPCORN = "popcorn"
    CTDFRAC_REAL = "ctdfrac-real"
    CTDFRAC_COMPLEX = "ctdfrac-complex"


@dataclass(frozen=True, slots=True)
class FamilyCurve:
    """
    Samples of one closed-form family.
    一个闭式族的采样。

    Attributes:
        kind: Family.
        kind: 族。
        params: Parameters used.
        params: 使用的参数。
        thetas: theta samples.
        thetas: theta 采样。
        values: dim_theta samples.
        values: dim_theta 采样值。
    """

    kind: FamilyKind
    params: dict[str, float]
    thetas: np.ndarray
    values: np.ndarray

    def to_rows(self) -> list[dict[str, float]]:
        return [{"theta": float(t), "value": float(v)} for t, v in zip(self.thetas, self.values, strict=True)]


def _param(params: dict[str, float], name: str) -> float:
    try:
        return float(params[name])
    except KeyError as exc:
        raise DomainError(
            message=f"Missing family parameter {name!r} / 缺少族参数 {name!r}",
            details={"missing": name},
            error_code="family_params",
        ) from exc


def family_curve(kind: FamilyKind | str, params: dict[str, float], thetas: Sequence[float]) -> FamilyCurve:
    """
    Sample a closed-form family.
    采样闭式族曲线。

    Args:
        kind: lattice {p, d}, sequence {p}, popcorn {t, d}, ctdfrac-real {p, h} or ctdfrac-complex {p, h}.
        kind: 族类型及其参数。
        params: Family parameters.
        params: 族参数。
        thetas: theta samples in [0, 1].
        thetas: [0, 1] 中的 theta 采样。

    Returns:
        FamilyCurve: Samples.
        FamilyCurve: 采样结果。
    """
    try:
        fk = FamilyKind(kind)
    except ValueError as exc:
        raise DomainError(message=f"Unknown family {kind!r} / 未知族类型", error_code="family_params") from exc
    grid = np.asarray(thetas, dtype=float)
    match fk:
        case FamilyKind.LATTICE:
            p, d = _param(params, "p"), int(_param(params, "d"))
            values = [lattice_dim(p, d, t) for t in grid]
        case FamilyKind.SEQUENCE:
            p = _param(params, "p")
            values = [lattice_dim(p, 1, t) for t in grid]
        case FamilyKind.POPCORN:
            t_exp, d = _param(params, "t"), int(_param(params, "d"))
            values = [popcorn_dims(t_exp, d, t).intermediate for t in grid]
        case FamilyKind.CTDFRAC_REAL | FamilyKind.CTDFRAC_COMPLEX:
            p, h = _param(params, "p"), _param(params, "h")
            cf = "real" if fk is FamilyKind.CTDFRAC_REAL else "complex"
            values = [ctdfrac_dim(p, h, cf, t) for t in grid]
    return FamilyCurve(kind=fk, params=dict(params), thetas=grid, values=np.asarray(values, dtype=float))
