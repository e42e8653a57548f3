"""Lattice-path count arrays of Young diagrams.

Each box of a Young diagram is filled with the number of north/east paths
from the foot of its column to the end of its row. Contiguous square blocks
with a 1 in the lower-right corner have determinant 1, and the Durfee square
carries an explicit integral orthonormal basis. This package builds the
array, certifies those facts exactly, and checks them against brute-force
path enumeration.
"""
from .binomial import binomial, catalan
from .closedforms import (
    IdentityInstance,
    knuth_identity_check,
    square_check,
    staircase_check,
    substituted_identity_check,
)
from .gram import (
    BasisExpansion,
    basis,
    basis_coefficient,
    basis_coefficient_minor,
    basis_expansion,
    conjugate_pairing,
    gram_determinant,
    pairing,
    verify_identities,
)
from .lgv import (
    DisjointSystem,
    ExactMatrix,
    Selection,
    check_determinant_one,
    cofactor_determinant,
    determinant,
    enumerate_disjoint_systems,
    path_matrix,
    scan_unit_selections,
    se_unit_selections,
    verify_lgv,
)
from .partition import (
    BoxCoord,
    Partition,
    PartitionError,
    conjugate,
    contains_box,
    durfee,
    enumerate_partitions,
    make_partition,
    parse_partition,
    truncate,
)
from .patharray import (
    LatticePath,
    PathCountArray,
    PathLimitExceeded,
    count_paths,
    enumerate_paths,
    path_count_array,
)
from .report import Check, VerificationReport

__version__ = "0.1.0"
