"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so the extension is marked optional and build failures
are non-fatal.
"""

import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    if not os.path.exists("src/fusedspecht/_kernel.pyx"):
        raise SystemExit("missing src/fusedspecht/_kernel.pyx")
    extensions = cythonize(
        [
            Extension(
                "fusedspecht._kernel",
                ["src/fusedspecht/_kernel.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    for ext in extensions:
        ext.optional = True

setup(ext_modules=extensions)
