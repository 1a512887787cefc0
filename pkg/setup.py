"""Build the optional compiled kernel; the package works without it."""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:  # no Cython: pure-Python fallback only
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("affinetl._kernel_c", ["src/affinetl/_kernel_c.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
