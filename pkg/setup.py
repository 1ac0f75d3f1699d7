"""Build script for the optional compiled kernels.

The package is fully functional without the extension: ``tweetlytics._kernels``
falls back to a pure-Python (numpy) implementation at import time. Compiling
``_fast.pyx`` just makes the SGD and LOWESS inner loops much faster.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            warnings.warn(f"compiled kernels skipped: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"compiled kernels skipped ({ext.name}): {exc}")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available, installing pure-Python kernels only")
        return []
    return cythonize(
        [
            Extension(
                "tweetlytics._kernels._fast",
                ["src/tweetlytics/_kernels/_fast.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
            "cdivision": True,
        },
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
