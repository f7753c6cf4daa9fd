"""Build script: compiles the optional F_p elimination kernel.

If Cython or a C compiler is unavailable the package installs without the
extension and runs on the pure-Python kernel.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "supercohom._kernels._modp",
                ["src/supercohom/_kernels/_modp.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
