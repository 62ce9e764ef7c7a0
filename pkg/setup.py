"""Build the optional Cython kernels.

Without Cython (or a C compiler) the package still installs and runs on the
pure-Python kernels in ``ybveronese._kernels_py``.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("YBX_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "ybveronese._kernels",
                    ["src/ybveronese/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
