"""Build script for the optional compiled kernels.

The package is pure Python plus one Cython extension holding the hot numeric
loops (integrand evaluation, Jacobi sweeps).  If Cython or a C compiler is
missing the extension is skipped and the pure-Python kernels are used at
import time; set PSCHATTEN_SKIP_EXT=1 to force that.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Try to build the accelerator; degrade to pure Python on failure."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"skipping compiled kernels ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping {ext.name} ({exc}); pure-Python fallback will be used")


ext_modules = []
cmdclass = {}
if not os.environ.get("PSCHATTEN_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "pschatten._kernels._ckernels",
                    ["src/pschatten/_kernels/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
        cmdclass["build_ext"] = OptionalBuildExt
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules, cmdclass=cmdclass)
