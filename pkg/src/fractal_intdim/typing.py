"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: typing.py
@DateTime: 2026-10-17
@Docs: Shared protocols and types for dimension curves.
维数曲线共享协议与类型。
"""

from typing import Protocol

import numpy as np

type FloatArray = np.ndarray


class SampledCurve(Protocol):
    """
    A dimension function sampled on an ascending theta grid.
    在递增 theta 网格上采样的维数函数。

    Attributes:
        thetas: Sample grid.
        thetas: 采样网格。
        values: Function values on the grid.
        values: 网格上的函数值。
    """

    @property
    def thetas(self) -> FloatArray: ...

    @property
    def values(self) -> FloatArray: ...
