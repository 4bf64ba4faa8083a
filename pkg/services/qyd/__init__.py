from .structure import (
    QYDStructure,
    SubquotientPair,
    build_YV,
    classify_1dim_check,
    induce_subquotient,
    mix_structures,
    qyd_check,
)

__all__ = [
    "QYDStructure",
    "SubquotientPair",
    "build_YV",
    "classify_1dim_check",
    "induce_subquotient",
    "mix_structures",
    "qyd_check",
]
