"""Lennard-Jones second virial coefficient, its self-similarity fixed point,
and exact-rational fugacity scaling-map analysis, with independent
cross-checks for every computed quantity."""

from . import balance, cluster_expansion, lj_virial, scaling_map, selfsim, specfun

__version__ = "0.1.0"

__all__ = [
    "balance",
    "cluster_expansion",
    "lj_virial",
    "scaling_map",
    "selfsim",
    "specfun",
    "__version__",
]
