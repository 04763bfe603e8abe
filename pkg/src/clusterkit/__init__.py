"""Character clusters of modules over restricted Lie algebras in characteristic p.

Exact arithmetic over GF(p^k): clusters and cluster decompositions,
amenability, C-induced modules and a brute-force oracle to check them.
"""

from .characters import Character, Cluster
from .clusters import (AmenabilityReport, ClusterDecomposition, Part, cluster_decompose,
                       compute_cluster, decompose_wrt, is_amenable, is_simple, splitting_field)
from .errors import ClusterkitError, EnumerationBoundError, InvariantViolation, PreconditionError
from .fields import FieldElem, FiniteField, make_field
from .induction import InducedModule, extend_character, induce, restricts_simply
from .lie import LieAlgebra, Subalgebra, idealizer, subnormal_chain, validate_algebra
from .linalg import Matrix, Poly
from .lmodule import (LieModule, direct_sum, has_character, hom_module, quotient, restrict,
                      submodule, validate_module)

__version__ = "0.1.0"

__all__ = [
    "AmenabilityReport", "Character", "Cluster", "ClusterDecomposition", "ClusterkitError",
    "EnumerationBoundError", "FieldElem", "FiniteField", "InducedModule", "InvariantViolation",
    "LieAlgebra", "LieModule", "Matrix", "Part", "Poly", "PreconditionError", "Subalgebra",
    "cluster_decompose", "compute_cluster", "decompose_wrt", "direct_sum", "extend_character",
    "has_character", "hom_module", "idealizer", "induce", "is_amenable", "is_simple", "make_field",
    "quotient", "restrict", "restricts_simply", "splitting_field", "submodule", "subnormal_chain",
    "validate_algebra", "validate_module",
]
