"""Build script: compiles the Gray-code scan extension when a toolchain is present.

The package works without the extension (a pure-Python scan core is selected
at import time), so a failed compile only costs speed, not functionality.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SYMSTAB_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/symstab/_scan.pyx"],
            compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
