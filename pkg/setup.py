"""Builds the compiled search kernels; everything else is declarative
in pyproject.toml. The package still imports (slower) without the
extension, so a failed build is not fatal to functionality."""

from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = [
    Extension(
        "indetmatch._ckernels",
        ["src/indetmatch/_ckernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}))
