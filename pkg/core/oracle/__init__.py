"""
Independent oracles: generic evaluation, exhaustive search over F_p, seeded
corpora and the cross-checks built on them.
"""

from core.oracle.brute_force import ImageSet, brute_force_image
from core.oracle.corpus import PolynomialCorpus
from core.oracle.cross_check import CrossCheckReport, EqualityMode, cross_check
from core.oracle.generic import (
    coordinate_rank,
    generic_evaluate,
    generic_ring,
    identity_oracle,
)
from core.oracle.roots import (
    RootExponentReport,
    confirm_root_modulo,
    resolve_root_exponent,
)

__all__ = [
    "CrossCheckReport",
    "EqualityMode",
    "ImageSet",
    "PolynomialCorpus",
    "RootExponentReport",
    "brute_force_image",
    "confirm_root_modulo",
    "coordinate_rank",
    "cross_check",
    "generic_evaluate",
    "generic_ring",
    "identity_oracle",
    "resolve_root_exponent",
]
