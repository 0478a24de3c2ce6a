"""Build script: compiles the optional grid-search extension.

The package is fully functional without the extension (a pure-Python
implementation is selected at import time), so a missing compiler or
Cython only costs speed, never correctness.  Set PRIORGLUE_NO_EXT=1 to
skip the extension build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    """Build extensions, downgrading any failure to a warning."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "WARNING: building the priorglue._gridcore extension failed; "
            f"falling back to the pure-Python grid search.\n  ({exc})",
            file=sys.stderr,
        )


ext_modules = []
if cythonize is not None and not os.environ.get("PRIORGLUE_NO_EXT"):
    ext_modules = cythonize(
        [Extension("priorglue._gridcore", ["src/priorglue/_gridcore.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
