from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("coxbound._coset", ["src/coxbound/_coset.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: install pure-Python only; the package falls back at import
    ext_modules = []

setup(ext_modules=ext_modules)
