from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    # pure-Python fallback still works; the compiled kernels are optional
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/gentrig/_kernels_cy.pyx"],
        language_level=3,
    )

setup(ext_modules=ext_modules)
