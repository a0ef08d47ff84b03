"""Optional Cython extension build.

The package is pure Python; the state-sum kernel in trigrid/_bracket_core.pyx
is compiled when Cython is available and silently skipped otherwise (the
pure-Python fallback in trigrid/_bracket.py is used at import time).
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/trigrid/_bracket_core.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
