import os

from setuptools import Extension, setup

ext_modules = []
pyx = os.path.join("src", "pigeonproof", "_fastcheck.pyx")
if os.path.exists(pyx):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "pigeonproof._fastcheck",
                    [pyx],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
