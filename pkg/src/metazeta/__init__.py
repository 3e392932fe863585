"""Subgroup-count zeta functions of split metacyclic p-groups.

The library computes zeta(G, s) = sum a_n(G) n^{-s}, where a_n counts
index-n (equivalently order-n) subgroups, for the groups

    G(p, m, n, k) = < a, b | a^(p^m) = b^(p^n) = 1, b a b^-1 = a^k >,

classifies parameters k up to isomorphism, zeta equality, and subgroup
lattice isomorphism, and cross-validates every closed formula against a
brute-force enumeration oracle.  A compiled closure kernel is used when
available; set METAZETA_BACKEND=python to force the pure fallback.
"""

from ._backend import BACKEND_NAME, available_backends
from .classify import (CheckResult, ClassificationReport, SweepSummary,
                       classify, compare, sweep_verify, zeta_classes)
from .errors import (HypothesisError, InternalInconsistencyError,
                     InvalidParameterError, MetazetaError, ResourceLimitError,
                     UnsupportedShapeError)
from .groups import (GroupParams, KPartition, cyclic_spans_equal, is_isomorphic,
                     is_valid, iso_classes, valid_k_set)
from .lattice import (SubgroupLattice, build_lattice, find_isomorphism,
                      is_lattice_isomorphic, lattice_classes,
                      lattice_for_params)
from .oracle import (ConcreteGroup, OmegaProfile, OracleLimits, SubgroupSet,
                     build_group, cocycle_subgroup_census, cyclic_group,
                     direct_product, enumerate_subgroups, omega_profile,
                     presentation_group, subgroup_counts)
from .padic import INFINITY, is_prime, lte_valuation, mult_order, prime_power, vp
from .zeta import (BerkovichShape, KernelProfile, TwoAdicSignature,
                   ZetaCoefficients, berkovich_counts, coefficients,
                   dirichlet_multiply, e_sequence, kernel_log, kernel_profile,
                   quasiregular_counts, u_ij, zeta_equal_by_theorem)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "BerkovichShape",
    "CheckResult",
    "ClassificationReport",
    "ConcreteGroup",
    "GroupParams",
    "HypothesisError",
    "INFINITY",
    "InternalInconsistencyError",
    "InvalidParameterError",
    "KPartition",
    "KernelProfile",
    "MetazetaError",
    "OmegaProfile",
    "OracleLimits",
    "ResourceLimitError",
    "SubgroupLattice",
    "SubgroupSet",
    "SweepSummary",
    "TwoAdicSignature",
    "UnsupportedShapeError",
    "ZetaCoefficients",
    "available_backends",
    "berkovich_counts",
    "build_group",
    "build_lattice",
    "classify",
    "cocycle_subgroup_census",
    "coefficients",
    "compare",
    "cyclic_group",
    "cyclic_spans_equal",
    "direct_product",
    "dirichlet_multiply",
    "e_sequence",
    "enumerate_subgroups",
    "find_isomorphism",
    "is_isomorphic",
    "is_lattice_isomorphic",
    "is_prime",
    "is_valid",
    "iso_classes",
    "kernel_log",
    "kernel_profile",
    "lattice_classes",
    "lattice_for_params",
    "lte_valuation",
    "mult_order",
    "omega_profile",
    "presentation_group",
    "prime_power",
    "quasiregular_counts",
    "subgroup_counts",
    "sweep_verify",
    "u_ij",
    "valid_k_set",
    "vp",
    "zeta_classes",
    "zeta_equal_by_theorem",
]
