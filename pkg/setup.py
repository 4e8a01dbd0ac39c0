"""Build the optional compiled core.

The extension mirrors the pure-Python backend bit for bit, which requires
IEEE-strict compilation: no fast-math, no FP contraction.  A failed
extension build falls back to the pure backend at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "casimir_gear._fastcore",
                ["src/casimir_gear/_fastcore.pyx"],
                extra_compile_args=["-O2", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
