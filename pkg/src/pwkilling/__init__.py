"""Killing and conformal Killing 2-tensors on 4D homogeneous plane waves.

Exact classification of the solution spaces by a prolongation connection,
with a numeric layer that evaluates solutions as tensor fields and checks the
PDEs directly.
"""

from .planewave import Params
from .solver import SolutionSpace, scan, solution_space, special_locus_catalog
from .classify import irreducible_count, kt_ckt_correspondence, reproduce

__version__ = "0.1.0"

__all__ = [
    "Params", "SolutionSpace", "solution_space", "scan", "special_locus_catalog",
    "irreducible_count", "kt_ckt_correspondence", "reproduce",
]
