"""Build script: compiles the optional Sinkhorn/transport kernels.

The package works without the extension (a pure-numpy fallback is selected
at import time), so a failed compile only costs speed, not functionality.
"""
import sys

from setuptools import setup


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "survite.ipm._core",
        ["src/survite/ipm/_core.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    try:
        return cythonize([ext], language_level="3")
    except Exception as exc:  # pragma: no cover - build-env dependent
        sys.stderr.write(f"survite: skipping compiled kernels ({exc})\n")
        return []


setup(ext_modules=extensions())
