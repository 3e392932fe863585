import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the accelerator if possible; the package falls back to the
    pure-Python kernels when the extension is missing."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"WARNING: skipping compiled core ({exc}); "
                  f"metazeta will use the pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: failed to build {ext.name} ({exc}); "
                  f"metazeta will use the pure-Python kernels")


ext_modules = []
if not os.environ.get("METAZETA_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("metazeta._fastcore", ["src/metazeta/_fastcore.pyx"])],
            compiler_directives={
                "language_level": "3str",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
