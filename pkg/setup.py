"""Build script: compiles the optional fast kernels.

The package is fully functional without the compiled extension (a numpy
fallback is selected at import time), so any build failure here degrades
gracefully to a pure-Python install.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "conescal._kernels._cy",
                ["src/conescal/_kernels/_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                # keep float arithmetic uncontracted so the compiled pivot
                # loop matches the numpy fallback bit for bit
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # noqa: BLE001 - any build-chain failure means "skip the extension"
    print(f"conescal: compiled kernels disabled ({exc}); using the pure-Python backend")

setup(ext_modules=ext_modules)
