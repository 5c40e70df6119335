from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("pglab._core", ["src/pglab/_core.pyx"])],
        language_level=3,
    )
)
