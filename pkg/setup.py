"""Build script for the optional compiled sweep kernels.

The package works without the extension (a numpy fallback is selected at
import time), so a missing compiler degrades gracefully instead of
failing the install.
"""

import warnings

import numpy as np
from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            warnings.warn(f"compiled kernels skipped ({exc}); using numpy fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({exc}); using numpy fallback")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/sliced_ot/_kernels/_sweeps.pyx"],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(
    ext_modules=ext_modules,
    include_dirs=[np.get_include()],
    cmdclass={"build_ext": OptionalBuildExt},
)
