"""Build script: compiles the optional C speedup kernels when Cython is available.

The package is fully functional without the extension; racot.kernels falls
back to the pure-Python implementations at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("RACOT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "racot._speedups",
                    ["src/racot/_speedups.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
