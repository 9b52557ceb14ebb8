"""Build script: compiles the optional distance-scan extension.

The package is fully functional without the extension (a pure-Python
kernel with the same contract is selected at import time); set
STABCAT_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("STABCAT_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension(
                "stabcat._distcore",
                sources=["src/stabcat/_distcore.pyx"],
                extra_compile_args=["-O3"],
            )],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
