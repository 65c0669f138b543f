"""
@Author: li
@Email: lijianqiao2906@live.com
@FileName: __main__.py
@DateTime: 2026-10-17
@Docs: python -m fractal_intdim.
"""

from fractal_intdim.cli import main

if __name__ == "__main__":
    raise SystemExit(main())
