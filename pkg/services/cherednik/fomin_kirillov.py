from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from loguru import logger

from services.braided.genericity import mixed_relations, specialized_deformed_factorial
from services.braided.operators import nichols_kernels, trivial_braiding
from services.doubles.double import accumulate
from services.doubles.relations import quadratic_dims_from
from services.groups.fin_group import symmetric_group
from services.linalg.field import FieldSpec, Scalar, ScalarInput
from services.linalg.subspace import Subspace
from services.modules.gmodule import reflection_module
from .embedding import ReflectionYD, build_reflection_yd


@dataclass
class FominKirillovResult:
    """Graded dimensions of E_n, of U(tr_n) and of B(Y_{S_n}) up to N."""
    n: int
    fomin_kirillov: List[int]
    transposition_lie: List[int]
    nichols: List[int]
    degree_two: int
    relations_match: bool
    specialized: Optional[List[int]] = None

    @property
    def agree(self) -> bool:
        return self.fomin_kirillov == self.nichols

    def to_json(self) -> Dict[str, object]:
        out = {
            "n": self.n,
            "fomin_kirillov": self.fomin_kirillov,
            "transposition_lie": self.transposition_lie,
            "nichols": self.nichols,
            "degree_two_relations": self.degree_two,
            "relations_match": self.relations_match,
            "agree": self.agree,
        }
        if self.specialized is not None:
            out["specialized"] = self.specialized
        return out


def _symbol(data: ReflectionYD, n: int, i: int, j: int) -> Tuple[int, int]:
    """([ij] position, sign) with [ji] = -[ij]; [ij] has coroot e_i - e_j for i < j."""
    group = data.y_g.group
    swap = list(range(n))
    swap[i], swap[j] = j, i
    position = data.position(group.index_of(tuple(swap)))
    return position, 1 if i < j else -1


def fomin_kirillov_relations(data: ReflectionYD, n: int, fld: FieldSpec) -> Subspace:
    """[ij]^2, [ij][kl] - [kl][ij] for disjoint pairs, and
    [ij][jk] + [jk][ki] + [ki][ij] for distinct i, j, k, inside Y (x) Y."""
    dim = data.y_g.dim
    one = fld.one

    def product(pairs: List[Tuple[int, int, int, int]], signs: List[int]) -> Dict[int, Scalar]:
        out: Dict[int, Scalar] = {}
        for (a, b, c, d), sign in zip(pairs, signs):
            (p, x), (q, y) = _symbol(data, n, a, b), _symbol(data, n, c, d)
            accumulate(out, p * dim + q, one * (x * y * sign))
        return out

    vectors = []
    for i in range(n):
        for j in range(i + 1, n):
            vectors.append(product([(i, j, i, j)], [1]))
            for k in range(n):
                for l in range(k + 1, n):
                    if len({i, j, k, l}) == 4:
                        vectors.append(product([(i, j, k, l), (k, l, i, j)], [1, -1]))
    for i, j, k in permutations(range(n), 3):
        vectors.append(product([(i, j, j, k), (j, k, k, i), (k, i, i, j)], [1, 1, 1]))
    return Subspace.span(vectors, dim * dim, fld)


def fomin_kirillov_dims(n: int, N: int, field: FieldSpec, u: Optional[ScalarInput] = None) -> FominKirillovResult:
    """E_n = T(Y)/<ker(id + Psi)> and U(tr_n) = T(Y)/<ker(id + Psi) cap ker(id + tau)>
    for Y = Y_{S_n}; with u given, also T(Y)/<ker((id + Psi) + u(id + tau))>."""
    group = symmetric_group(n)
    module = reflection_module(group, field)
    data = build_reflection_yd(module)
    y = data.y_g
    psi = y.braiding()
    e_two = nichols_kernels(psi, 2)[2]
    tr_two = mixed_relations([psi, trivial_braiding(y.dim, field)], 2)[2]
    specialized = None
    if u is not None:
        deformed = specialized_deformed_factorial(psi, 2, [u]).kernel()
        specialized = quadratic_dims_from(deformed, y.dim, N)
    result = FominKirillovResult(
        n=n,
        fomin_kirillov=quadratic_dims_from(e_two, y.dim, N),
        transposition_lie=quadratic_dims_from(tr_two, y.dim, N),
        nichols=[space.codim for space in nichols_kernels(psi, N)],
        degree_two=e_two.dim,
        relations_match=fomin_kirillov_relations(data, n, field) == e_two,
        specialized=specialized,
    )
    logger.info(f"E_{n}: {result.fomin_kirillov}, B(Y_S{n}): {result.nichols}, U(tr_{n}): {result.transposition_lie}")
    return result
