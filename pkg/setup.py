import os

from setuptools import Extension, setup

PYX = "src/setfam/_kernels/_ckern.pyx"

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists(PYX):
    ext_modules = cythonize(
        [Extension("setfam._kernels._ckern", [PYX], extra_compile_args=["-O2"])],
        language_level=3,
    )
else:
    # The package works without the compiled kernels (pure-Python fallback).
    ext_modules = []

setup(ext_modules=ext_modules)
