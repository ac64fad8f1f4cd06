"""Build hook for the optional compiled kernel extension.

The package is pure Python by default.  When Cython is available the bitset
kernels in src/vminor/_ckernels.pyx are compiled; without it (or with
VMINOR_PURE_PYTHON set) the install falls back to the pure-Python kernels
with identical behaviour.
"""

import os

from setuptools import Extension, setup


def extension_modules():
    if os.environ.get("VMINOR_PURE_PYTHON"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("vminor._ckernels", ["src/vminor/_ckernels.pyx"])
    return cythonize([ext], language_level="3")


setup(ext_modules=extension_modules())
