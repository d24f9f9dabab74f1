import os

from setuptools import Extension, setup

# The compiled kernel is optional: plain `pip install -e .` without Cython (or
# with TROPICOUNT_PURE=1) skips it and the package falls back to pure Python.
ext_modules = []
if not os.environ.get("TROPICOUNT_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("tropicount._speedups", ["src/tropicount/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
