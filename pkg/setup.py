"""Build script: compiles the optional Cython kernel extension.

The extension accelerates the two hot loops (Gauss linking double sum and
the integer-conjugacy brute-force search).  It is strictly optional: if
Cython or a C compiler is unavailable the build falls back to a pure-Python
install and ``stemcert._kernels`` selects the NumPy implementations at
import time.
"""

from __future__ import annotations

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to a pure-Python install on any failure."""

    def run(self):  # noqa: D102
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - depends on toolchain
            self._warn(exc)

    def build_extension(self, ext):  # noqa: D102
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - depends on toolchain
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building the compiled kernels failed ({exc!r}); "
            "installing with the pure-Python fallback only.",
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - depends on toolchain
        print(
            "WARNING: Cython not available; skipping the compiled kernels.",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [
            Extension(
                "stemcert._kernels._core",
                ["src/stemcert/_kernels/_core.pyx"],
            )
        ],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
