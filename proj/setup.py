"""Builds the pybind11 extension through the project's CMake tree.

The prebuilt-wheel backends are not assumed to exist; this shim only needs a
cmake binary and a C++20 toolchain, and setuptools for everything else.
"""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DSYMMSPACE_BUILD_PYTHON=ON",
                "-DSYMMSPACE_BUILD_TESTS=OFF",
                f"-DPython_EXECUTABLE={sys.executable}",
                f"-DSYMMSPACE_EXT_OUTPUT_DIR={out_dir}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "--parallel"],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("symmspace._core")],
    cmdclass={"build_ext": CMakeBuild},
)
