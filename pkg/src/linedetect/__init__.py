"""Exact character computations deciding when a reductive subgroup of GL_n
is the stabilizer of a line in a polynomial representation."""
from .characters import (
    Character,
    DecompResult,
    Functor,
    SizeCapExceeded,
    apply_functor,
    decompose,
    size_cap,
    trivial_multiplicity,
)
from .detector import DetectionReport, GroupSpec, detect
from .liealg import Group, enumerate_irreps_of_dim, irreducible_character, root_system, weyl_dimension
from .lr import lr_coefficient, pieri_row, tensor_decompose_lr
from .partitions import Partition, count_bounded_partitions, dual_sl, gaussian_polynomial
from .plethysm import plethysm_coefficient, sym_of_sym_sl2

__all__ = [
    "Character",
    "DecompResult",
    "DetectionReport",
    "Functor",
    "Group",
    "GroupSpec",
    "Partition",
    "SizeCapExceeded",
    "apply_functor",
    "count_bounded_partitions",
    "decompose",
    "detect",
    "dual_sl",
    "enumerate_irreps_of_dim",
    "gaussian_polynomial",
    "irreducible_character",
    "lr_coefficient",
    "pieri_row",
    "plethysm_coefficient",
    "root_system",
    "size_cap",
    "sym_of_sym_sl2",
    "tensor_decompose_lr",
    "trivial_multiplicity",
    "weyl_dimension",
]
