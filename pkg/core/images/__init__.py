"""
Image classification and constructive preimages.
"""

from core.images.classifier import (
    Classification,
    ImageCase,
    analyse,
    classify,
    closed_form_evaluation,
)
from core.images.descriptor import ImageDescriptor, ImageKind, realize
from core.images.preimage import (
    Assignment,
    NeedsRoot,
    NotInImage,
    NotInImageReason,
    PreimageResult,
    build_witness,
    preimage,
    preimage_from,
    root_exponent,
    spread_exponents,
)

__all__ = [
    "Assignment",
    "Classification",
    "ImageCase",
    "ImageDescriptor",
    "ImageKind",
    "NeedsRoot",
    "NotInImage",
    "NotInImageReason",
    "PreimageResult",
    "analyse",
    "build_witness",
    "classify",
    "closed_form_evaluation",
    "preimage",
    "preimage_from",
    "realize",
    "root_exponent",
    "spread_exponents",
]
