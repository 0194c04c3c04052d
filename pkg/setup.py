"""Build script: compiles the optional Cython kernel module.

The package works without the extension (clfinfo.kernels falls back to the
numpy implementation), so a missing Cython or C compiler must not break the
install. Set CLFINFO_SKIP_NATIVE=1 to force a pure-Python install.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("CLFINFO_SKIP_NATIVE"):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "clfinfo._kernels_c",
                    ["src/clfinfo/_kernels_c.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
