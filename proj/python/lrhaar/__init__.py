"""Likelihood ratio Haar transforms, variance stabilization and smoothing."""

try:
    from lrhaar._lrhaar import *  # noqa: F401,F403  (installed package layout)
    from lrhaar._lrhaar import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension on PYTHONPATH next to the package
    from _lrhaar import *  # noqa: F401,F403
    from _lrhaar import __version__  # noqa: F401
