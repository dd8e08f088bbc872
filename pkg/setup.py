"""Build script for the optional compiled kernel.

hgtensor is pure Python except for one Cython accelerator
(``hgtensor._kernels``).  If the extension cannot be built the install
still succeeds and the package falls back to the NumPy kernel at import
time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    """Skip the accelerator instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except (CCompilerError, ExecError, PlatformError) as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, ValueError) as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            f"WARNING: compiled kernel not built ({exc}); "
            "falling back to the pure-Python kernel",
            file=sys.stderr,
        )


if cythonize is not None:
    extensions = cythonize(
        [Extension("hgtensor._kernels", ["src/hgtensor/_kernels.pyx"])],
        language_level="3",
    )
else:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
