"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: storage.py
@DateTime: 2026-10-17
@Docs: Atomic file output.
原子文件写出。
"""

import logging
import os
import tempfile
from pathlib import Path

from fractal_intdim.exceptions import FractalDimError

logger = logging.getLogger(__name__)


def safe_unlink(path: Path) -> None:
    """
    Best-effort unlink (ignore errors).
    尽力删除文件（忽略错误）。

    Args:
        path: File path.
        path: 文件路径。
    """
    try:
        path.unlink(missing_ok=True)
    except OSError:
        pass


def atomic_write_bytes(path: str | os.PathLike[str], payload: bytes) -> Path:
    """
    Write bytes through a temporary file in the target directory, then rename.
    先写入目标目录中的临时文件，再重命名。

    Args:
        path: Destination path.
        path: 目标路径。
        payload: Bytes to write.
        payload: 要写入的字节。

    Returns:
        Path: Destination path.
        Path: 目标路径。

    Raises:
        FractalDimError: The write failed; no partial file is left behind.
        FractalDimError: 写入失败；不会留下部分写入的文件。
    """
    target = Path(path)
    tmp: Path | None = None
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        fd, name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=target.parent)
        tmp = Path(name)
        with os.fdopen(fd, "wb") as f:
            f.write(payload)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, target)
    except OSError as exc:
        if tmp is not None:
            safe_unlink(tmp)
        raise FractalDimError(
            message=f"Cannot write {target}: {exc} / 无法写入文件",
            details={"path": str(target)},
            error_code="write_failed",
        ) from exc
    logger.debug("wrote %d bytes to %s", len(payload), target)
    return target
