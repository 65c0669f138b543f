"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: test_storage.py
@DateTime: 2026-10-17
@Docs: Tests for storage.py module.
storage.py 模块测试。
"""

import os
from pathlib import Path
from unittest.mock import patch

import pytest

from fractal_intdim.exceptions import FractalDimError
from fractal_intdim.storage import atomic_write_bytes, safe_unlink


class TestAtomicWrite:
    """Tests for atomic_write_bytes.
    atomic_write_bytes 测试。
    """

    def test_writes_and_creates_parents(self, tmp_path: Path) -> None:
        target = tmp_path / "a" / "b" / "curve.csv"
        assert atomic_write_bytes(target, b"theta,dim\n") == target
        assert target.read_bytes() == b"theta,dim\n"

    def test_overwrites(self, tmp_path: Path) -> None:
        target = tmp_path / "out.json"
        target.write_bytes(b"old")
        atomic_write_bytes(str(target), b"new")
        assert target.read_bytes() == b"new"

    def test_no_leftover_on_failure(self, tmp_path: Path) -> None:
        """A failed rename leaves neither target nor temp file / 重命名失败时不留下目标或临时文件。"""
        target = tmp_path / "out.csv"
        with patch("fractal_intdim.storage.os.replace", side_effect=OSError("disk full")):
            with pytest.raises(FractalDimError) as ei:
                atomic_write_bytes(target, b"x")
        assert ei.value.error_code == "write_failed"
        assert ei.value.exit_code == 2
        assert os.listdir(tmp_path) == []


class TestSafeUnlink:
    """Tests for safe_unlink.
    safe_unlink 测试。
    """

    def test_removes_file(self, tmp_path: Path) -> None:
        path = tmp_path / "f.tmp"
        path.write_bytes(b"")
        safe_unlink(path)
        assert not path.exists()

    def test_missing_is_silent(self, tmp_path: Path) -> None:
        safe_unlink(tmp_path / "absent.tmp")
