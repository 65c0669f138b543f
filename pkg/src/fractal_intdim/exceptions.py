"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: exceptions.py
@DateTime: 2026-10-17
@Docs: Fractal dimension error hierarchy.
分形维数异常体系。
"""

from typing import Any


class FractalDimError(Exception):
    """
    Fractal dimension errors.
    分形维数异常。

    Errors raised by carpet parsing, dimension formulas, oracles and the CLI.
    载毯解析、维数公式、验证器与命令行中抛出的异常。

    Attributes:
        message: Error message.
        message: 错误消息。
        exit_code: Process exit status used by the CLI.
        exit_code: 命令行使用的进程退出码。
        details: Error details.
        details: 错误详情。
        error_code: Stable error code.
        error_code: 稳定错误码。
    """

    def __init__(
        self,
        *,
        message: str,
        exit_code: int = 2,
        details: Any | None = None,
        error_code: str = "fractal_dim_error",
    ) -> None:
        """
        Initialize a fractal dimension error.
        初始化分形维数异常。

        Args:
            message: Error message.
                错误消息。
            exit_code: Process exit status.
                进程退出码。
            details: Optional error details.
                可选错误详情。
            error_code: Stable error code.
                稳定错误码。
        """
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.details = details
        self.error_code = error_code


class CarpetFormatError(FractalDimError):
    """
    Grid file or carpet validation error.
    网格文件或载毯校验错误。
    """


class DomainError(FractalDimError):
    """
    Argument outside the domain of an operation.
    参数超出运算定义域。
    """


class IterateEscapeError(DomainError):
    """
    A t-iterate left the rate function domain.
    t 迭代值离开了速率函数定义域。
    """


class CapacityError(FractalDimError):
    """
    Integer, enumeration or state budget exceeded.
    整数、枚举或状态预算超限。
    """


class RootSearchError(FractalDimError):
    """
    Root bracketing or convergence failure.
    根的区间定位或收敛失败。
    """


class GridMismatchError(FractalDimError):
    """
    Curves sampled on different theta grids.
    曲线的 theta 采样网格不一致。
    """
