from .double import (
    DoubleEngine,
    DoubleSpec,
    GeneratorKind,
    NormalFormElement,
    associativity_witnesses,
    straighten,
)
from .minimality import minimality_check
from .pairing import HarishChandraGram, harish_chandra_formula, harish_chandra_gram, yd_pairing_check
from .pbw import pbw_slices
from .relations import (
    ideal_closure,
    minimal_double,
    minimal_relations,
    quadratic_double_dims,
    quadratic_dims_from,
    symmetric_ideal,
    triangular_ideal_check,
)
from .standard_module import StandardModule, standard_module_matrices

__all__ = [
    "DoubleEngine",
    "DoubleSpec",
    "GeneratorKind",
    "HarishChandraGram",
    "NormalFormElement",
    "StandardModule",
    "associativity_witnesses",
    "harish_chandra_formula",
    "harish_chandra_gram",
    "ideal_closure",
    "minimal_double",
    "minimal_relations",
    "minimality_check",
    "pbw_slices",
    "quadratic_double_dims",
    "quadratic_dims_from",
    "standard_module_matrices",
    "straighten",
    "symmetric_ideal",
    "triangular_ideal_check",
    "yd_pairing_check",
]
