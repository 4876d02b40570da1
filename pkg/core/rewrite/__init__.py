"""
Rewriting to left-normed words and to canonical normal forms.
"""

from core.rewrite.left_norm import left_norm, left_norm_traced
from core.rewrite.normal_form import (
    HeadCoefficients,
    NormalFormPoly,
    canonical_word,
    head_coefficients,
    head_word,
    is_identity,
    normal_form,
    reduce,
)

__all__ = [
    "HeadCoefficients",
    "NormalFormPoly",
    "canonical_word",
    "head_coefficients",
    "head_word",
    "is_identity",
    "left_norm",
    "left_norm_traced",
    "normal_form",
    "reduce",
]
