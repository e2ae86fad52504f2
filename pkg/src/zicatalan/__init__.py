"""Exact computations for the Catalan equation x^p - y^q = 1 over the Gaussian integers."""

__version__ = "0.1.0"

from .gaussian import GaussianInt, canonical, gdivmod, ggcd, gpow, norm, val_one_plus_i  # noqa: E402
from .search import SearchBox, search_catalan, search_general, search_shifted  # noqa: E402

__all__ = [
    "GaussianInt",
    "SearchBox",
    "canonical",
    "gdivmod",
    "ggcd",
    "gpow",
    "norm",
    "search_catalan",
    "search_general",
    "search_shifted",
    "val_one_plus_i",
]
