import os

from setuptools import setup

ext_modules = []
if os.environ.get("POSETCODES_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "posetcodes.kernels._core",
                    sources=["src/posetcodes/kernels/_core.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install pure-Python only, the kernel
        # dispatcher falls back automatically.
        ext_modules = []

setup(ext_modules=ext_modules)
