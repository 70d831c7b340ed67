from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off: the kernels must round exactly like the pure-Python
# reference (no fused multiply-add), the equivalence tests compare bitwise.
extensions = [
    Extension(
        "lineclip._kernels",
        ["src/lineclip/_kernels.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(
        extensions,
        language_level=3,
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
)
