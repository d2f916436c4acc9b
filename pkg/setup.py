"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension; any failure to
compile it (missing Cython, missing C compiler) falls back to a pure
Python install.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow extension build failures; the package works without them."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - build environment dependent
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        sys.stderr.write(
            "warning: building the pertinax accelerator extension failed (%s); "
            "installing with the pure Python kernel only\n" % (exc,)
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover
        return []
    return cythonize(
        ["src/pertinax/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
