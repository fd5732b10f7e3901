"""Build script: compiles the Cython reduction kernel when possible.

The package works without the extension (pure-Python fallback selected at
import), so a missing compiler or Cython only costs speed.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/detsing/_kernel.pyx",
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"detsing: building without the compiled kernel ({exc})")

setup(ext_modules=ext_modules)
