"""Build script: compiles the optional Cython search kernel.

The package works without the extension (a pure-Python kernel is selected at
import time); set SHALLOWHIT_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SHALLOWHIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/shallowhit/_kernel/_exact.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
