"""
Partitions, tableaux and the symmetric group algebra.
"""
from src.lefhodge.combinat.group_algebra import (
    GroupAlgebraElement,
    Perm,
    act_on_word,
    column_symmetrizer,
    compose,
    row_symmetrizer,
    sign,
    young_projector,
)
from src.lefhodge.combinat.partitions import (
    Partition,
    associated,
    column_data,
    conjugacy_class_size,
    count_standard_tableaux,
    enumerate_partitions,
)
from src.lefhodge.combinat.tableaux import FilledTableau, standard_tableaux

__all__ = [
    "FilledTableau",
    "GroupAlgebraElement",
    "Partition",
    "Perm",
    "act_on_word",
    "associated",
    "column_data",
    "column_symmetrizer",
    "compose",
    "conjugacy_class_size",
    "count_standard_tableaux",
    "enumerate_partitions",
    "row_symmetrizer",
    "sign",
    "standard_tableaux",
    "young_projector",
]
