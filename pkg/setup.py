import os

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or with MWB_PURE=1) the
# package falls back to the pure-Python twin selected in mwb.kernel.
ext_modules = []
if os.environ.get("MWB_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("mwb._kernel", ["src/mwb/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
