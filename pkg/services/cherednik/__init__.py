from .algebra import (
    CherednikParams,
    DunklResult,
    cherednik_algebra,
    class_parameters,
    commutativity_classification_check,
    commutator_relation_check,
    delta_from_values,
    delta_tc,
    delta_tc_shape,
    dunkl_check,
    dunkl_commutator,
    irreducibility_report,
)
from .embedding import (
    ReflectionYD,
    build_reflection_yd,
    embed_Mc_check,
    embed_Pi_check,
    proportionality_scalar,
    reflection_subquotient,
)
from .fomin_kirillov import FominKirillovResult, fomin_kirillov_dims, fomin_kirillov_relations
from .reflections import ReflectionData, cocycle, covariance_check, find_reflections
from .restricted import RestrictedResult, coinvariant_relations, restricted_dims, restricted_spec

__all__ = [
    "CherednikParams",
    "DunklResult",
    "FominKirillovResult",
    "ReflectionData",
    "ReflectionYD",
    "RestrictedResult",
    "build_reflection_yd",
    "cherednik_algebra",
    "class_parameters",
    "cocycle",
    "coinvariant_relations",
    "commutativity_classification_check",
    "commutator_relation_check",
    "covariance_check",
    "delta_from_values",
    "delta_tc",
    "delta_tc_shape",
    "dunkl_check",
    "dunkl_commutator",
    "embed_Mc_check",
    "embed_Pi_check",
    "find_reflections",
    "fomin_kirillov_dims",
    "fomin_kirillov_relations",
    "irreducibility_report",
    "proportionality_scalar",
    "reflection_subquotient",
    "restricted_dims",
    "restricted_spec",
]
