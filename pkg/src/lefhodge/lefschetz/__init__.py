"""
Albert descriptors, Lefschetz groups and coniveau certificates.
"""
from src.lefhodge.lefschetz.albert import (
    AbelianDescriptor,
    AbelianFactor,
    AlbertType,
    Violation,
    require_valid,
    validate,
)
from src.lefhodge.lefschetz.coniveau import (
    ConiveauTable,
    Constituent,
    GHCCertificate,
    coniveau_report,
    constituent_profile,
    hodge_symmetry_audit,
)
from src.lefhodge.lefschetz.group import GroupBlock, GroupKind, LefschetzGroupData, lefschetz_group

__all__ = [
    "AbelianDescriptor",
    "AbelianFactor",
    "AlbertType",
    "ConiveauTable",
    "Constituent",
    "GHCCertificate",
    "GroupBlock",
    "GroupKind",
    "LefschetzGroupData",
    "Violation",
    "coniveau_report",
    "constituent_profile",
    "hodge_symmetry_audit",
    "lefschetz_group",
    "require_valid",
    "validate",
]
