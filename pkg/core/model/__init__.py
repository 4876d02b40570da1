"""
Concrete arithmetic in L_n and L_inf.
"""

from core.model.element import (
    Element,
    SubspaceDescriptor,
    contains,
    mul,
    parse_assignment,
    parse_element,
    power_ideal,
    right_power,
    right_power_closed_form,
)
from core.model.evaluation import evaluate

__all__ = [
    "Element",
    "SubspaceDescriptor",
    "contains",
    "evaluate",
    "mul",
    "parse_assignment",
    "parse_element",
    "power_ideal",
    "right_power",
    "right_power_closed_form",
]
