import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernel is an optional speedup; axlab.kernel falls back to the
# pure-Python implementation when the extension is missing.
ext_modules = []
if cythonize is not None and not os.environ.get("AXLAB_NO_EXT"):
    ext_modules = cythonize(
        [
            Extension(
                "axlab._kernel_cy",
                sources=["src/axlab/_kernel_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
