"""Build script: compiles the optional modular linear-algebra extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so a failed compile only costs speed.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext = Extension(
        "gsring._modkern",
        sources=["src/gsring/_modkern.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write(f"gsring: skipping compiled kernels ({exc})\n")

setup(ext_modules=ext_modules)
