"""Build script for the optional compiled kernel.

The package works without the extension: chartcalc.kernels falls back to a
pure-Python implementation when the compiled module is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "chartcalc.kernels._fastkernel",
                ["src/chartcalc/kernels/_fastkernel.pyx"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
