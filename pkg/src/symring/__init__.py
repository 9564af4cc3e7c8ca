"""Exact computations in the rational group ring of the symmetric group."""

from .characters import (
    CharacterTable, PartitionMultiset, character_table, ideal_multiplicities, lr_coefficient, lr_product,
    mn_character, plethysm,
)
from .dft import evaluate, fourier, fourier_of_group_sum, inverse_fourier, rep_matrix
from .errors import GuardError, ParseError, SymringError
from .group_ring import GroupRingElement, group_sum, young_symmetrizer
from .ideal_decomp import DecompositionResult, decompose, idempotent_for_intersection, idempotent_for_sum
from .identities import Expression, IdentityBasis, orthogonal_identities, reduce_expression
from .partitions import StandardTableau, dimension, enumerate_partitions, standard_tableaux
from .perm import Permutation, enumerate_group
from .tensor_symmetry import (
    ContractionSpec, MetricSignature, SymmetryClass, TensorDense, contraction_space, invariant_count,
    power_ideal, product_ideal, symmetry_ideal_from_identities,
)
from .wedderburn import BlockAlgebraElement, block_shape

__version__ = "0.1.0"

__all__ = [
    "BlockAlgebraElement", "CharacterTable", "ContractionSpec", "DecompositionResult", "Expression", "GroupRingElement",
    "GuardError", "IdentityBasis", "MetricSignature", "ParseError", "PartitionMultiset", "Permutation",
    "StandardTableau", "SymmetryClass", "SymringError", "TensorDense", "block_shape", "character_table",
    "contraction_space", "decompose", "dimension", "enumerate_group", "enumerate_partitions", "evaluate", "fourier",
    "fourier_of_group_sum", "group_sum", "idempotent_for_intersection", "idempotent_for_sum",
    "ideal_multiplicities", "inverse_fourier", "invariant_count", "lr_coefficient", "lr_product", "mn_character",
    "orthogonal_identities", "plethysm", "power_ideal", "product_ideal", "reduce_expression", "rep_matrix",
    "standard_tableaux", "symmetry_ideal_from_identities", "young_symmetrizer",
]
