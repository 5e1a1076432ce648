from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("magicount._ck", ["src/magicount/_ck.pyx"])],
        compiler_directives={"language_level": "3"},
    )
)
