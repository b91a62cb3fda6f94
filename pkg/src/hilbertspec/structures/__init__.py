"""Group representations, conjugacy-class enumeration and marked length spectra."""

from .representation import (
    RELATOR_TOL,
    Representation,
    TriangleGroupParams,
    cartan_matrix,
    dual_rep,
    rotation_subgroup_rep,
    triangle_reflection_rep,
    triangle_rep,
)
from .spectrum import (
    SpectrumComparison,
    SpectrumEntry,
    SpectrumTable,
    Verdict,
    compare_spectra,
    enumerate_conjugacy_words,
    is_torsion,
    marked_spectrum,
    self_duality_defect,
    self_duality_witness,
    word_length,
)
from .words import canonical, cyclic_reduce, free_reduce, invert, reduced_words, rotations

__all__ = [
    "RELATOR_TOL",
    "Representation",
    "TriangleGroupParams",
    "cartan_matrix",
    "dual_rep",
    "rotation_subgroup_rep",
    "triangle_reflection_rep",
    "triangle_rep",
    "SpectrumComparison",
    "SpectrumEntry",
    "SpectrumTable",
    "Verdict",
    "compare_spectra",
    "enumerate_conjugacy_words",
    "is_torsion",
    "marked_spectrum",
    "self_duality_defect",
    "self_duality_witness",
    "word_length",
    "canonical",
    "cyclic_reduce",
    "free_reduce",
    "invert",
    "reduced_words",
    "rotations",
]
