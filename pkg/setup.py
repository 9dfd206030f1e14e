"""Build the optional Cython kernels.

The package works without them: ``lcgroups.kernels`` falls back to the numpy
implementations when the extension cannot be imported.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("LCGROUPS_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "lcgroups._kernels",
                    ["src/lcgroups/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
            },
        )

setup(ext_modules=ext_modules)
