from .fin_group import (
    ConjClass,
    FinGroup,
    cyclic_group,
    dihedral_group,
    group_from_generators,
    symmetric_group,
    trivial_group,
)

__all__ = [
    "ConjClass",
    "FinGroup",
    "cyclic_group",
    "dihedral_group",
    "group_from_generators",
    "symmetric_group",
    "trivial_group",
]
