"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: config.py
@DateTime: 2026-10-17
@Docs: Numerical configuration helpers.
数值配置助手。

Tolerances, iteration caps and enumeration budgets shared by every module.
所有模块共享的容差、迭代上限与枚举预算。

Environment variables / 环境变量:
        - FRACTAL_INTDIM_ROOT_TOL:
            Absolute tolerance of dimension root searches (default 1e-12).
            维数求根的绝对容差（默认 1e-12）。
        - FRACTAL_INTDIM_LAMBDA_TOL:
            Absolute tolerance of the lambda(t) inversion (default 1e-13).
            lambda(t) 反演的绝对容差（默认 1e-13）。
        - FRACTAL_INTDIM_ENUMERATION_BUDGET:
            Maximal number of enumerated words or types (default 2**24).
            枚举词或类型的最大数量（默认 2**24）。
        - FRACTAL_INTDIM_<FIELD>:
            Any other field of FractalConfig, upper-cased.
            FractalConfig 的其他字段（大写）。

Examples:
        >>> from fractal_intdim.config import resolve_config
        >>> cfg = resolve_config(root_tol=1e-10)
        >>> cfg.root_tol
        1e-10
"""

import os
from dataclasses import dataclass, fields
from typing import Any

from fractal_intdim.exceptions import DomainError


@dataclass(frozen=True, slots=True)
class FractalConfig:
    """Numerical configuration.

    数值配置。

    Attributes:
        lambda_tol: Tolerance of the lambda(t) inversion.
            lambda(t) 反演容差。
        root_tol: Tolerance of dimension root searches.
            维数求根容差。
        max_bisect_iter: Iteration cap of bisection searches.
            二分搜索的迭代上限。
        snap_tol: Distance under which theta snaps to a power of gamma.
            theta 吸附到 gamma 幂次的距离阈值。
        theta_floor: Smallest accepted theta.
            可接受的最小 theta。
        exponent_bound: Exponent bound of the same-grid search.
            同网格搜索的指数上限。
        enumeration_budget: Maximal enumerated words or types.
            最大枚举词或类型数。
        dp_state_budget: Maximal dynamic-programming window states per level.
            每层动态规划窗口状态上限。
        equivalence_tol: Tolerance of the log-ratio equivalence checks.
            等价性对数比检验容差。
        scan_points: Sample count of the scan root mode.
            扫描求根模式的采样点数。
        moran_depth: Default explicit depth of Moran plans.
            Moran 方案默认显式深度。
    """

    lambda_tol: float = 1e-13
    root_tol: float = 1e-12
    max_bisect_iter: int = 100
    snap_tol: float = 1e-12
    theta_floor: float = 1e-8
    exponent_bound: int = 32
    enumeration_budget: int = 2**24
    dp_state_budget: int = 2**20
    equivalence_tol: float = 1e-12
    scan_points: int = 1024
    moran_depth: int = 2000


def _env_get(*names: str) -> str | None:
    """Get the first non-empty environment variable value.

    获取第一个非空环境变量值。

    Args:
        *names: Candidate environment variable names in priority order.
            候选环境变量名（按优先级顺序）。

    Returns:
        The first non-empty value, or None.
            返回第一个非空值；若都为空则返回 None。
    """
    for n in names:
        v = os.getenv(n)
        if v is not None and v.strip():
            return v.strip()
    return None


def _coerce(name: str, raw: str, kind: type) -> Any:
    """
    Convert an environment string to the field type.
    将环境变量字符串转换为字段类型。

    Args:
        name: Environment variable name.
        name: 环境变量名。
        raw: Raw value.
        raw: 原始值。
        kind: Target type (int or float).
        kind: 目标类型（int 或 float）。

    Returns:
        Any: Converted value.
        Any: 转换后的值。

    Raises:
        DomainError: If the value cannot be converted.
        DomainError: 无法转换时抛出。
    """
    try:
        # Accept "2**24" style budgets / 支持 "2**24" 形式的预算
        if kind is int and "**" in raw:
            base, exp = raw.split("**", 1)
            return int(base) ** int(exp)
        return kind(raw)
    except ValueError as exc:
        raise DomainError(
            message=f"Invalid value for {name}: {raw!r} / {name} 的取值无效: {raw!r}",
            details={"name": name, "value": raw},
            error_code="bad_config",
        ) from exc


def resolve_config(*, env_prefix: str = "FRACTAL_INTDIM", **overrides: Any) -> FractalConfig:
    """Resolve configuration from parameters and environment variables.

    从参数和环境变量解析配置。

     Resolution order / 解析优先级:
        1) keyword parameters / 关键字参数
        2) env: `{env_prefix}_<FIELD>` / 环境变量 `{env_prefix}_<FIELD>`
        3) FractalConfig defaults / FractalConfig 默认值

    Args:
        env_prefix: Prefix for environment variables.
            环境变量前缀（默认 FRACTAL_INTDIM）。
        **overrides: Field values; None means "not given".
            字段取值；None 表示未指定。

    Returns:
        A FractalConfig instance.
            返回 FractalConfig 配置实例。

    Raises:
        DomainError: Unknown field or malformed environment value.
            未知字段或环境变量格式错误。
    """
    known = {f.name: f for f in fields(FractalConfig)}
    unknown = sorted(set(overrides) - set(known))
    if unknown:
        raise DomainError(
            message=f"Unknown config fields: {unknown} / 未知配置字段: {unknown}",
            details={"fields": unknown},
            error_code="bad_config",
        )
    values: dict[str, Any] = {}
    for name, f in known.items():
        given = overrides.get(name)
        if given is not None:
            values[name] = given
            continue
        env_name = f"{env_prefix}_{name.upper()}"
        raw = _env_get(env_name)
        if raw is not None:
            kind = int if isinstance(f.default, int) else float
            values[name] = _coerce(env_name, raw, kind)
    return FractalConfig(**values)
