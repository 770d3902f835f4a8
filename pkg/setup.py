"""Build script for the optional compiled kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so the build only tries to cythonize
when Cython is importable.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "vincular.kernels._cycore",
                ["src/vincular/kernels/_cycore.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
