"""Build script; compiles the optional _ckernels extension.

The extension accelerates pair counting and permutation resampling. If the
build toolchain is unavailable the package installs anyway and falls back
to the pure-Python kernels at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """build_ext that degrades to the pure-Python backend on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: skipping compiled kernels ({exc}); "
              "pure-Python fallback will be used")


def _extensions():
    if os.environ.get("CITEMETRICS_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without compiled kernels")
        return []
    return cythonize(
        [Extension("citemetrics._ckernels", ["src/citemetrics/_ckernels.pyx"])],
        language_level=3,
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
