from .gmodule import (
    GModule,
    character_module,
    direct_sum,
    dual_module,
    permutation_module,
    reflection_module,
    sign_module,
    tensor_module,
    tensor_power_module,
    trivial_module,
)
from .yd_module import YDModule

__all__ = [
    "GModule",
    "YDModule",
    "character_module",
    "direct_sum",
    "dual_module",
    "permutation_module",
    "reflection_module",
    "sign_module",
    "tensor_module",
    "tensor_power_module",
    "trivial_module",
]
