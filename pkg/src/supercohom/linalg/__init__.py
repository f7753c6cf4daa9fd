"""Exact linear algebra over F_p, Z and Q."""

from .decomposition import (
    DecompositionResult,
    canonical_classes,
    cohomology_decomposition,
    crt_classes,
    primitive,
)
from .elimination import EchelonSystem, nullspace, rank, reduce_relation, rref, solve
from .modular import crt_combine, rational_reconstruction
from .rings import GF, QQ, ZZ, Ring, is_prime, phi_p, symmetric
from .smith import SmithDecomposition, det, smith_normal_form
from .sparse import SparseMatrix, read_triplets, write_triplets

__all__ = [
    "DecompositionResult",
    "EchelonSystem",
    "GF",
    "QQ",
    "Ring",
    "SmithDecomposition",
    "SparseMatrix",
    "ZZ",
    "canonical_classes",
    "cohomology_decomposition",
    "crt_classes",
    "crt_combine",
    "det",
    "is_prime",
    "nullspace",
    "phi_p",
    "primitive",
    "rank",
    "rational_reconstruction",
    "read_triplets",
    "reduce_relation",
    "rref",
    "smith_normal_form",
    "solve",
    "symmetric",
    "write_triplets",
]
