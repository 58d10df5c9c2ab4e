"""Rank computations on truncated non-archimedean group chains."""

try:
    from ._ncgrank import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-tree layout: the module sits on PYTHONPATH directly
    from _ncgrank import *  # noqa: F401,F403

__version__ = "0.1.0"
