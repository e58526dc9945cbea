"""Build script: compiles the optional Cython kernel when possible.

The package is pure Python plus one optional extension,
eigenpoints._kernel, a compiled twin of eigenpoints._kernel_py.  Missing
Cython or a failing compiler leaves a fully functional pure-Python
install; the backend is chosen at import time.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Swallow extension build failures; the pure kernel takes over."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: skipping compiled kernel ({exc}); pure-Python fallback in use")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: skipping {ext.name} ({exc}); pure-Python fallback in use")


ext_modules = []
if not os.environ.get("EIGENPOINTS_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "eigenpoints._kernel",
                    ["src/eigenpoints/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:  # pragma: no cover - build environment dependent
        print("warning: Cython unavailable; building without the compiled kernel")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
