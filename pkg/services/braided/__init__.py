from .operators import (
    Codomain,
    DegreeOperator,
    braid_equation_check,
    braided_factorial,
    braided_integer,
    nichols_kernels,
    trivial_braiding,
    woronowicz_oracle,
)
from .quasibraided import (
    left_relations,
    quasibraided_factorial,
    quasibraided_integer,
    right_quasibraided_factorial,
    right_relations,
)
from .genericity import GenericParams, deformed_factorial, mixed_relations, specialized_deformed_factorial

__all__ = [
    "Codomain",
    "DegreeOperator",
    "GenericParams",
    "braid_equation_check",
    "braided_factorial",
    "braided_integer",
    "deformed_factorial",
    "left_relations",
    "mixed_relations",
    "nichols_kernels",
    "quasibraided_factorial",
    "quasibraided_integer",
    "right_quasibraided_factorial",
    "right_relations",
    "specialized_deformed_factorial",
    "trivial_braiding",
    "woronowicz_oracle",
]
