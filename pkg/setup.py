from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package works without the compiled kernels; _backend falls back
    # to the pure-Python implementations.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "nbhdclust._kernels_c",
                ["src/nbhdclust/_kernels_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
