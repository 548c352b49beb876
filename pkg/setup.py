"""Build script: compiles the optional mod-p kernel extension.

The extension is a pure accelerator; when Cython or a working C toolchain
is missing, the build logs a notice and the package installs with the
pure-Python kernel fallback instead.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that downgrades compiler failures to a notice."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"jordanquad: skipping compiled kernels ({exc}); "
                  "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"jordanquad: could not compile {ext.name} ({exc}); "
                  "the pure-Python fallback will be used")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize("src/jordanquad/_fpcore.pyx", language_level=3)
except Exception as exc:
    print(f"jordanquad: skipping compiled kernels ({exc}); "
          "the pure-Python fallback will be used")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
