"""Build hook for the optional compiled kernel extension.

The package runs pure-Python out of the box; when Cython and a C
compiler are available the integer kernels are compiled as
``thetares._kernels_cy`` and picked up automatically at import (see
``src/thetares/backend.py``).  Set THETARES_NO_EXT=1 to skip the
extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("THETARES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "thetares._kernels_cy",
                    ["src/thetares/_kernels_cy.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
