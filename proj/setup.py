"""Builds the pybind11 extension; everything else lives in pyproject.toml."""

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

extension = Pybind11Extension(
    "stablelattice._stablelattice",
    sources=[
        "bindings/module.cpp",
        "src/bouquet.cpp",
        "src/compression.cpp",
        "src/core.cpp",
        "src/generate.cpp",
        "src/oracle.cpp",
        "src/robust.cpp",
        "src/rotations.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[extension], cmdclass={"build_ext": build_ext})
