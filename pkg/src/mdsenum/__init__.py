"""Enumeration of minimal dominating sets in H-free graph classes."""

from .enumerators import (
    enum_maximal_independent_sets,
    enum_mds_diamond_free,
    enum_mds_general,
    enum_mds_kt_plus_k2,
    enum_mds_paw_free,
    enum_mds_triangle_free,
)
from .errors import ClassViolation, ContractViolation, InputError, OracleCapExceeded
from .graph import (
    BicoloredGraph,
    Graph,
    closed_neighborhood,
    detect_classes,
    is_minimal_dominating,
    private_neighbors,
)
from .oracle import oracle_extension, oracle_mds
from .ordered import SolutionStream, dedup

__version__ = "0.1.0"
