"""Build script: compiles the optional extension kernels when Cython is available.

The package is fully functional without the extension; `hurwitz._kernels`
falls back to the pure-Python implementations at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HURWITZ_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "hurwitz._kernels._fast",
                    ["src/hurwitz/_kernels/_fast.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
