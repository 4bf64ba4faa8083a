from .algebra import (
    TruncatedGradedAlgebra,
    deformed_nichols_hilbert,
    dual_kernel_dims,
    nichols_algebra,
    nichols_hilbert,
    nichols_product,
    relations_are_stable,
)
from .bosonisation import (
    BosonisedAlgebra,
    bosonisation_check,
    central_pairing,
    central_pairing_report,
    kaplansky_algebra,
    kaplansky_module,
    kaplansky_report,
)

__all__ = [
    "BosonisedAlgebra",
    "TruncatedGradedAlgebra",
    "bosonisation_check",
    "central_pairing",
    "central_pairing_report",
    "deformed_nichols_hilbert",
    "dual_kernel_dims",
    "kaplansky_algebra",
    "kaplansky_module",
    "kaplansky_report",
    "nichols_algebra",
    "nichols_hilbert",
    "nichols_product",
    "relations_are_stable",
]
