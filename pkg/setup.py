"""Builds the optional compiled kernels.

The package is pure Python by default; when Cython and a C compiler are
available, ``pip install -e .`` (or ``python setup.py build_ext --inplace``)
compiles ``reflorbit._kernels`` and the backend picks it up automatically.
A missing compiler must never break installation."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/reflorbit/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"reflorbit: skipping compiled kernels ({exc}); pure Python fallback")

setup(ext_modules=ext_modules)
