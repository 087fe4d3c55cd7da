from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("sumlabel._ckernels", ["src/sumlabel/_ckernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
