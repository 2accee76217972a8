"""Build the optional compiled kernel.

If Cython or a C compiler is missing the package still installs and runs on
the pure-Python kernel.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("LEDIAGRAMS_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "lediagrams._kernels._core",
                    ["src/lediagrams/_kernels/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
