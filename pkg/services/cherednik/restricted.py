from dataclasses import dataclass
from typing import Dict, List, Optional

from loguru import logger

from models.reports import CheckReport
from services.doubles.double import DoubleSpec
from services.doubles.minimality import minimality_check
from services.doubles.relations import ideal_closure, symmetric_ideal
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.linalg.tensor import tensor_power
from services.modules.gmodule import GModule, dual_module
from .algebra import CherednikParams, delta_tc


def _averaging_allowed(m: GModule) -> bool:
    p = m.field.characteristic
    return p == 0 or m.group.order % p != 0


def symmetric_power_action(m: GModule, n: int, symmetric: Subspace, g: int) -> Matrix:
    """Action of g on S^n(V) in the complement coordinates of the symmetric ideal."""
    return symmetric.quotient_map() @ tensor_power(m.rho[g], n) @ symmetric.section()


def invariants(m: GModule, n: int, symmetric: Subspace) -> Subspace:
    """S^n(V)^G in complement coordinates: the image of the averaging operator when
    p does not divide |G|, the simultaneous fixed space otherwise."""
    fld = m.field
    size = symmetric.codim
    identity = Matrix.identity(size, fld)
    if _averaging_allowed(m):
        total = Matrix.zeros((size, size), fld)
        for g in range(m.group.order):
            total = total + symmetric_power_action(m, n, symmetric, g)
        return Subspace.image_of(total)
    gens = m.group.generator_ids
    if not gens:
        return Subspace.full(size, fld)
    blocks = [symmetric_power_action(m, n, symmetric, s) - identity for s in gens]
    return Subspace.kernel_of(blocks[0].vstack(*blocks[1:]))


def coinvariant_relations(m: GModule, N: int) -> List[Subspace]:
    """Components of the ideal of T(V) generated by Lambda^2 V and the lifts of
    the positive-degree invariants of S(V)."""
    d, fld = m.dim, m.field
    symmetric = symmetric_ideal(d, fld, N)
    generators: Dict[int, Subspace] = {}
    for n in range(1, N + 1):
        fixed = invariants(m, n, symmetric[n])
        section = symmetric[n].section()
        lifted = Subspace.span([section.apply(v) for v in fixed.basis], d ** n, fld)
        logger.debug(f"Invariants of S^{n}({m.name or 'V'}): dimension {fixed.dim}")
        generators[n] = lifted
    if N >= 2:
        generators[2] = generators[2] + symmetric[2]
    return ideal_closure(generators, d, fld, N)


def restricted_spec(m: GModule, params: CherednikParams, N: int) -> DoubleSpec:
    """The restricted algebra H_{0,c}(G) / <S(V)^G_+, S(V*)^G_+>."""
    if m.field.element(params.t):
        logger.warning("The restricted algebra is defined at t = 0; ignoring the supplied t")
    restricted = CherednikParams(t=0, c=params.c, default_c=params.default_c)
    q = delta_tc(m, restricted)
    left = coinvariant_relations(m, N)
    right = coinvariant_relations(dual_module(m), N)
    return DoubleSpec(qyd=q, truncation=N, left_relations=left, right_relations=right, name=f"restricted H_0,c({m.group.name or 'G'})")


@dataclass
class RestrictedResult:
    """Coinvariant dimensions and the restricted algebra they determine.

    Attributes:
        coinvariant_dims: dim S(V)_G in degrees 0..N
        stabilized: whether some degree <= N already vanishes
        restricted_dim: (dim S(V)_G)^2 |G| when stabilized
        minimality: minimality report of the restricted double
    """
    coinvariant_dims: List[int]
    stabilized: bool
    restricted_dim: Optional[int]
    group_order: int
    minimality: CheckReport

    @property
    def total(self) -> Optional[int]:
        return sum(self.coinvariant_dims) if self.stabilized else None

    def to_json(self) -> Dict[str, object]:
        return {
            "coinvariant_dims": self.coinvariant_dims,
            "stabilized": self.stabilized,
            "coinvariant_total": self.total,
            "restricted_dim": self.restricted_dim,
            "total_equals_group_order": self.total == self.group_order if self.stabilized else None,
        }


def restricted_dims(m: GModule, params: CherednikParams, N: int, minimality_degree: Optional[int] = None) -> RestrictedResult:
    spec = restricted_spec(m, params, N)
    dims = spec.quotient_dims("left")
    stabilized = 0 in dims
    restricted = sum(dims) ** 2 * m.group.order if stabilized else None
    if not stabilized:
        logger.info(f"Coinvariant algebra not stabilized by degree {N}: {dims}")
    report = minimality_check(spec, N=minimality_degree)
    logger.info(f"Coinvariant dims {dims}, restricted dimension {restricted}")
    return RestrictedResult(
        coinvariant_dims=dims, stabilized=stabilized, restricted_dim=restricted, group_order=m.group.order, minimality=report
    )
