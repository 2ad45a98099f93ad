"""Build script: compiles the optional counting kernel extension.

The extension is optional; if Cython or a C compiler is unavailable the
package installs anyway and falls back to the pure-Python kernel at import
time.  Set LETTERSTATS_NO_EXTENSION=1 to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LETTERSTATS_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "letterstats._speedups",
                    ["src/letterstats/_speedups.pyx"],
                    optional=True,
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
