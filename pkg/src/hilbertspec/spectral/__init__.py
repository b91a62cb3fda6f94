"""Matrix-level spectral layer."""

from .matrix import SquareMatrix
from .proximal import (
    DEFAULT_TOL,
    ProximalityClass,
    ProximalTag,
    char_poly,
    classify_proximal,
    common_eigenvalue_ratio,
    duality_map,
    eigen_ratios,
    eigenvalues,
    hilbert_translation_length,
    matrix_power,
    normalize_det,
    same_length_pair,
)
from .roots import aberth_roots, cluster_roots, exact_poly_roots

__all__ = [
    "DEFAULT_TOL",
    "ProximalTag",
    "ProximalityClass",
    "SquareMatrix",
    "aberth_roots",
    "char_poly",
    "classify_proximal",
    "cluster_roots",
    "common_eigenvalue_ratio",
    "duality_map",
    "eigen_ratios",
    "eigenvalues",
    "exact_poly_roots",
    "hilbert_translation_length",
    "matrix_power",
    "normalize_det",
    "same_length_pair",
]
