from glob import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "naqcsim._core",
    sources=sorted(glob("src/*.cpp")) + ["python/bindings.cpp"],
    include_dirs=["include"],
    cxx_std=20,
)

setup(
    packages=["naqcsim"],
    package_dir={"naqcsim": "python/naqcsim"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
