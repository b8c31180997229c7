"""Essential dimension of finite pseudo-reflection groups, computed exactly."""

from .catalog import (
    Alternating,
    Cyclic,
    Exceptional,
    GroupSpec,
    Imprimitive,
    Symmetric,
    centre_order,
    degrees,
    group_order,
    validate_characteristic,
)
from .eddim import (
    EdReport,
    EdValue,
    a_springer,
    ed_absolute,
    ed_at_p,
    ed_report,
    frobenius_number,
    pmed,
    pmed_a_group,
)
from .molien import extract_degrees, molien_series
from .spectra import a_direct, reflection_count

__all__ = [
    "Alternating",
    "Cyclic",
    "EdReport",
    "EdValue",
    "Exceptional",
    "GroupSpec",
    "Imprimitive",
    "Symmetric",
    "a_direct",
    "a_springer",
    "centre_order",
    "degrees",
    "ed_absolute",
    "ed_at_p",
    "ed_report",
    "extract_degrees",
    "frobenius_number",
    "group_order",
    "molien_series",
    "pmed",
    "pmed_a_group",
    "reflection_count",
    "validate_characteristic",
]
