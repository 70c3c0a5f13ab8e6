"""Equivariant stability analysis for diagonal subspace arrangements.

Exact symmetric-function pipelines for the cohomology characteristics of
k-equal (and general diagonal) arrangement complements, stabilization
detection with certified sharp bounds, and a brute-force lattice
homology model for cross-checking at small n.
"""

from .partitions import (
    LambdaSet,
    Partition,
    SetPartition,
    all_set_partitions,
    extend_lambda_set,
    partitions_of,
    set_partition_type,
)
from .stability import (
    PsiParams,
    StabilityReport,
    general_bound,
    is_stable_step,
    kequal_char,
    kequal_summands,
    lambda_char_smalln,
    psi,
    psi_degree_part,
    sharp_bound_certified,
    theorem_bounds,
)
from .symfunc import (
    POWER,
    SCHUR,
    LRTableau,
    SymmetricFunction,
    e,
    h,
    hook_series,
    lie_character,
    lie_series,
    lr_coeff,
    lr_expand,
    lr_tableaux,
    mul,
    omega,
    p,
    partition_homology_character,
    phi_shift,
    phi_unshift,
    plethysm,
    schur,
    signed_homology_series,
    to_power,
    to_schur,
)

__version__ = "0.1.0"
