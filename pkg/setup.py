import os

from setuptools import Extension, setup

# The compiled core is optional: the package falls back to
# quadcert._purepy when the extension is absent. Set QUADCERT_NO_EXTENSION=1
# to skip the build deliberately. No -ffast-math / -march flags: the two
# backends must keep plain IEEE double semantics so their results agree.
ext_modules = []
if os.environ.get("QUADCERT_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("quadcert._core", sources=["src/quadcert/_core.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
