from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "ratseries._core",
    sources=[
        "python/src/bindings.cpp",
        "src/intpoly.cpp",
        "src/series.cpp",
        "src/hankel.cpp",
        "src/restriction.cpp",
        "src/capacity.cpp",
        "src/contour.cpp",
        "src/dfinite.cpp",
        "src/json_io.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
    packages=["ratseries"],
    package_dir={"ratseries": "python/ratseries"},
)
