from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Tuple

from loguru import logger

from core.exceptions import InvalidStructureError
from models.reports import CheckReport
from services.groups.fin_group import FinGroup, cyclic_group
from services.linalg.field import FieldSpec, Scalar
from services.linalg.matrix import Matrix
from services.linalg.tensor import index_word
from services.modules.gmodule import GModule
from services.modules.yd_module import YDModule
from .algebra import TruncatedGradedAlgebra, nichols_algebra, nichols_product

# (word in B(Y), group element)
Basis = Tuple[Tuple[int, ...], int]
SmashElement = Dict[Basis, Scalar]
TensorElement = Dict[Tuple[Basis, Basis], Scalar]


def _add(target: Dict, key, value: Scalar) -> None:
    total = target.get(key)
    total = value if total is None else total + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


@dataclass
class BosonisedAlgebra:
    """B(Y) # kG with (b g)(b' k) = b g(b') gk and the biproduct coproduct
    Delta(v) = v (x) 1 + sum_h h (x) P_h v, Delta(g) = g (x) g.

    Attributes:
        nichols: the truncated Nichols algebra of Y
        y: the Yetter-Drinfeld module
    """
    nichols: TruncatedGradedAlgebra
    y: YDModule

    @property
    def group(self) -> FinGroup:
        return self.y.group

    @property
    def field(self) -> FieldSpec:
        return self.y.field

    @property
    def dim(self) -> int:
        """Dimension as far as the truncation sees it."""
        return self.nichols.total_dim * self.group.order

    def basis(self) -> List[Basis]:
        out = []
        for n in range(self.nichols.truncation + 1):
            for word in self.nichols.complement(n):
                for g in range(self.group.order):
                    out.append((word, g))
        return out

    def act(self, g: int, word: Tuple[int, ...]) -> Dict[Tuple[int, ...], Scalar]:
        result = {(): self.field.one}
        columns = self.y.base.rho[g].columns()
        for letter in word:
            step: Dict[Tuple[int, ...], Scalar] = {}
            for w, c in result.items():
                for i, x in columns[letter].items():
                    _add(step, w + (i,), c * x)
            result = step
        return result

    def multiply(self, a: SmashElement, b: SmashElement) -> SmashElement:
        out: SmashElement = {}
        for (u, g), x in a.items():
            for (w, k), y in b.items():
                moved = nichols_product(self.nichols, {u: self.field.one}, self.nichols.element(self.act(g, w)))
                gk = self.group.mul(g, k)
                for v, c in moved.items():
                    _add(out, (v, gk), x * y * c)
        return out

    def generator(self, index: int) -> SmashElement:
        return {(w, self.group.identity): x for w, x in self.nichols.generator(index).items()}

    def group_element(self, g: int) -> SmashElement:
        return {((), g): self.field.one}

    def unit(self) -> SmashElement:
        return self.group_element(self.group.identity)

    def counit(self, a: SmashElement) -> Scalar:
        total = self.field.zero
        for (word, _), x in a.items():
            if not word:
                total += x
        return total

    def is_central(self, a: SmashElement) -> bool:
        gens = [self.generator(i) for i in range(self.y.dim)]
        gens += [self.group_element(g) for g in self.group.generator_ids]
        return all(self.multiply(a, x) == self.multiply(x, a) for x in gens)

    # coproduct

    def tensor_multiply(self, a: TensorElement, b: TensorElement) -> TensorElement:
        out: TensorElement = {}
        for (a1, a2), x in a.items():
            for (b1, b2), y in b.items():
                left = self.multiply({a1: self.field.one}, {b1: self.field.one})
                right = self.multiply({a2: self.field.one}, {b2: self.field.one})
                for k1, c1 in left.items():
                    for k2, c2 in right.items():
                        _add(out, (k1, k2), x * y * c1 * c2)
        return out

    def coproduct_generator(self, index: int) -> TensorElement:
        e = self.group.identity
        one = self.field.one
        out: TensorElement = {(((index,), e), ((), e)): one}
        for h, projector in self.y.grading.items():
            for j, x in projector.column(index).items():
                _add(out, (((), h), ((j,), e)), x)
        return out

    def coproduct_group(self, g: int) -> TensorElement:
        return {(((), g), ((), g)): self.field.one}

    def coproduct_word(self, word: Tuple[int, ...]) -> TensorElement:
        e = self.group.identity
        result: TensorElement = {(((), e), ((), e)): self.field.one}
        for letter in word:
            result = self.tensor_multiply(result, self.coproduct_generator(letter))
        return result


def bosonise(y: YDModule, N: int) -> BosonisedAlgebra:
    return BosonisedAlgebra(nichols=nichols_algebra(y, N), y=y)


def bosonisation_check(y: YDModule, N: int) -> CheckReport:
    """Delta is multiplicative on the defining relations of B(Y) # kG up to degree N."""
    alg = bosonise(y, N)
    group = alg.group
    for n in range(2, N + 1):
        for k, relation in enumerate(alg.nichols.relations[n].basis):
            total: TensorElement = {}
            for index, x in relation.items():
                word = index_word(index, n, y.dim)
                for key, c in alg.coproduct_word(word).items():
                    _add(total, key, x * c)
            if total:
                logger.warning(f"Coproduct does not kill relation {k} in degree {n}")
                return CheckReport.fail("bosonisation", {"degree": n, "relation": k})
    for g in group.generator_ids:
        g_inv = group.inv(g)
        for i in range(y.dim):
            lhs = alg.tensor_multiply(alg.tensor_multiply(alg.coproduct_group(g), alg.coproduct_generator(i)), alg.coproduct_group(g_inv))
            rhs: TensorElement = {}
            for j, x in y.base.rho[g].column(i).items():
                for key, c in alg.coproduct_generator(j).items():
                    _add(rhs, key, x * c)
            if lhs != rhs:
                return CheckReport.fail("bosonisation", {"g": group.label(g), "v": i + 1})
    grouplike = all(
        alg.tensor_multiply(alg.coproduct_group(g), alg.coproduct_group(h)) == alg.coproduct_group(group.mul(g, h))
        for g in group.generator_ids
        for h in group.generator_ids
    )
    return CheckReport.ok("bosonisation", dims=alg.nichols.dims, dimension=alg.dim, grouplike=grouplike)


def kaplansky_module(n: int, field: FieldSpec) -> YDModule:
    """V of dimension n over Z_2, the generator acting by -1, all of V in degree s.
    The braiding is -tau, so B(V) is the exterior algebra."""
    group = cyclic_group(2)
    s = group.generator_ids[0]
    minus = Matrix.scalar(n, -field.one, field)
    base = GModule.from_generator_images(group, [minus], field, name=f"sign^{n}")
    return YDModule.from_degrees(base, [s] * n, name=f"Lambda(k^{n})")


def kaplansky_algebra(n: int, field: FieldSpec) -> BosonisedAlgebra:
    """Lambda(V) # kZ_2 for dim V = n, truncated one degree above the top."""
    return bosonise(kaplansky_module(n, field), n + 1)


def kaplansky_report(n: int, field: FieldSpec) -> CheckReport:
    """dim = 2^{n+1}, the top form omega = v_1..v_n is central (n even) and omega^2 = 0."""
    alg = kaplansky_algebra(n, field)
    omega = {(w, alg.group.identity): x for w, x in alg.nichols.normal(tuple(range(n))).items()}
    central = alg.is_central(omega)
    square_zero = not alg.multiply(omega, omega)
    expected = 2 ** (n + 1)
    details = {"dimension": alg.dim, "expected": expected, "omega_central": central, "omega_square_zero": square_zero}
    if alg.dim != expected or not central or not square_zero:
        return CheckReport.fail("kaplansky", details)
    return CheckReport.ok("kaplansky", **details)


def central_pairing(alg: BosonisedAlgebra, a: SmashElement, n: int) -> SmashElement:
    """(y^n, x^n)_H in the rank-one double over H = alg with [y, x] = a central.

    Straightens y^n . x^n with y . (x^i h y^k) = x^i h y^{k+1} + i x^{i-1} (a h) y^k
    and keeps the part with no x and no y.
    """
    if not alg.is_central(a):
        raise InvalidStructureError("rank-one double", "the commutator [y, x] is not central")
    one = alg.field.one
    state: Dict[Tuple[int, Basis, int], Scalar] = {(n, ((), alg.group.identity), 0): one}
    for _ in range(n):
        step: Dict[Tuple[int, Basis, int], Scalar] = {}
        for (i, h, k), c in state.items():
            _add(step, (i, h, k + 1), c)
            if i:
                for h2, x in alg.multiply(a, {h: one}).items():
                    _add(step, (i - 1, h2, k), c * x * i)
        state = step
    return {h: c for (i, h, k), c in state.items() if i == 0 and k == 0}


def power(alg: BosonisedAlgebra, a: SmashElement, n: int) -> SmashElement:
    result = alg.unit()
    for _ in range(n):
        result = alg.multiply(result, a)
    return result


def central_pairing_report(alg: BosonisedAlgebra, a: SmashElement, n: int) -> CheckReport:
    """Compares (y^n, x^n)_H with n! a^n; also records its counit."""
    pairing = central_pairing(alg, a, n)
    expected = {k: x * factorial(n) for k, x in power(alg, a, n).items()}
    expected = {k: x for k, x in expected.items() if x}
    details = {"degree": n, "epsilon": alg.field.to_json(alg.counit(pairing)), "terms": len(pairing)}
    if pairing != expected:
        return CheckReport.fail("central_pairing", {"degree": n}, **details)
    return CheckReport.ok("central_pairing", **details)
