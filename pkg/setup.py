"""Build script for the compiled 2-D hull kernel.

The package works without the extension (a pure NumPy fallback is selected
at import time), but the Monte Carlo experiments are much faster with it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "randpoly._kernels._hull2d",
                ["src/randpoly/_kernels/_hull2d.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )
except ImportError:
    # Source distribution without Cython: fall back to the shipped C file
    # if present, otherwise build a pure-Python package.
    import os

    c_file = "src/randpoly/_kernels/_hull2d.c"
    if os.path.exists(c_file):
        extensions = [
            Extension(
                "randpoly._kernels._hull2d",
                [c_file],
                extra_compile_args=["-O3"],
            )
        ]
    else:
        extensions = []

setup(ext_modules=extensions)
