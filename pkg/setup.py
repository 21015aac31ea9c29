import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("AZTECOUNT_PURE_PYTHON"):
    # optional=True: a failed compile degrades to the pure-Python kernel
    ext_modules = cythonize(
        [Extension("aztecount._barcore", ["src/aztecount/_barcore.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
