import sys

from setuptools import Extension, setup

# The compiled kernels are optional: sensegraph falls back to the pure-Python
# implementations when the extension is missing or fails to build.
ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sensegraph._native", ["src/sensegraph/_native.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("Cython not available; building without the compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
