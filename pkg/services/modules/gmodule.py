from dataclasses import dataclass
from typing import List, Optional, Sequence

from loguru import logger

from core.exceptions import InvalidStructureError, NonEquivariantMapError, ShapeMismatchError
from models.reports import CheckReport
from services.groups.fin_group import FinGroup
from services.linalg.field import FieldSpec, Scalar, ScalarInput, same_field
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.linalg.tensor import tensor_power


@dataclass
class GModule:
    """A finite-dimensional representation of a finite group.

    Attributes:
        group: the acting group
        dim: dimension of the module
        rho: element id -> matrix of the action
        field: ground field
        name: descriptive name used in reports
    """
    group: FinGroup
    dim: int
    rho: List[Matrix]
    field: FieldSpec
    name: str = ""

    def __post_init__(self):
        if len(self.rho) != self.group.order:
            raise InvalidStructureError("module", f"{len(self.rho)} matrices for a group of order {self.group.order}")
        for m in self.rho:
            if m.shape != (self.dim, self.dim):
                raise ShapeMismatchError("module matrix", m.shape, (self.dim, self.dim))

    @classmethod
    def from_generator_images(cls, group: FinGroup, images: Sequence[Matrix], field: FieldSpec, name: str = "") -> "GModule":
        """Extend generator images along the BFS words of the group, then verify."""
        if len(images) != len(group.generators):
            raise InvalidStructureError("module", f"{len(images)} images for {len(group.generators)} generators")
        dim = images[0].rows if images else 1
        rho: List[Matrix] = [Matrix.identity(dim, field)]
        for k in range(1, group.order):
            parent, position = group.parents[k]
            rho.append(rho[parent] @ images[position])
        module = cls(group=group, dim=dim, rho=rho, field=field, name=name)
        report = module.check()
        if not report.passed:
            raise InvalidStructureError("module", "generator images do not define a representation", report.witness)
        return module

    def action(self, g: int) -> Matrix:
        return self.rho[g]

    def right_action(self, g: int) -> Matrix:
        """Matrix of f -> f o rho(g) on dual coordinates."""
        return self.rho[g].transpose()

    def check(self) -> CheckReport:
        """rho(e) = I and rho(g s) = rho(g) rho(s) for every g and generator s."""
        identity = Matrix.identity(self.dim, self.field)
        if self.rho[0] != identity:
            return CheckReport.fail("gmodule", {"element": self.group.label(0), "reason": "rho(e) != I"})
        for g in range(self.group.order):
            for s in self.group.generator_ids:
                gs = self.group.mul(g, s)
                if self.rho[g] @ self.rho[s] != self.rho[gs]:
                    return CheckReport.fail("gmodule", {"g": self.group.label(g), "h": self.group.label(s)})
        for g in range(self.group.order):
            if self.rho[g] @ self.rho[self.group.inv(g)] != identity:
                return CheckReport.fail("gmodule", {"element": self.group.label(g), "reason": "not invertible"})
        return CheckReport.ok("gmodule", dim=self.dim, order=self.group.order)

    def character(self) -> List[Scalar]:
        zero = self.field.zero
        return [sum((m.entry(i, i) for i in range(self.dim)), zero) for m in self.rho]

    def is_intertwiner(self, target: "GModule", mu: Matrix) -> bool:
        return all(target.rho[s] @ mu == mu @ self.rho[s] for s in self.group.generator_ids)

    def require_intertwiner(self, target: "GModule", mu: Matrix, name: str) -> None:
        for s in self.group.generator_ids:
            if target.rho[s] @ mu != mu @ self.rho[s]:
                raise NonEquivariantMapError(name, self.group.label(s))

    def fixed_subspace(self) -> Subspace:
        """Simultaneous fixed vectors: the intersection of ker(rho(s) - I) over generators."""
        identity = Matrix.identity(self.dim, self.field)
        gens = self.group.generator_ids
        if not gens:
            return Subspace.full(self.dim, self.field)
        stacked = (self.rho[gens[0]] - identity).vstack(*(self.rho[s] - identity for s in gens[1:]))
        return Subspace.kernel_of(stacked)

    def commutant_dimension(self) -> int:
        """Dimension of {X : X rho(g) = rho(g) X}; 1 for absolutely irreducible modules."""
        gens = self.group.generator_ids
        if not gens:
            return self.dim * self.dim
        identity = Matrix.identity(self.dim, self.field)
        blocks = [self.rho[s].kron(identity) - identity.kron(self.rho[s].transpose()) for s in gens]
        return len(blocks[0].vstack(*blocks[1:]).kernel_basis())


def trivial_module(group: FinGroup, field: FieldSpec, dim: int = 1) -> GModule:
    identity = Matrix.identity(dim, field)
    return GModule(group=group, dim=dim, rho=[identity] * group.order, field=field, name="trivial")


def character_module(group: FinGroup, values: Sequence[ScalarInput], field: FieldSpec, name: str = "character") -> GModule:
    """One-dimensional module from the values of a character on every element."""
    rho = [Matrix.scalar(1, field.element(v), field) for v in values]
    module = GModule(group=group, dim=1, rho=rho, field=field, name=name)
    if not module.check().passed:
        raise InvalidStructureError("character", "values are not multiplicative")
    return module


def permutation_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sign_module(group: FinGroup, field: FieldSpec) -> GModule:
    return character_module(group, [permutation_sign(p) for p in group.perms], field, name="sign")


def permutation_module(group: FinGroup, field: FieldSpec) -> GModule:
    rho = [Matrix.permutation(list(p), field) for p in group.perms]
    return GModule(group=group, dim=group.degree, rho=rho, field=field, name="permutation")


def reflection_module(group: FinGroup, field: FieldSpec) -> GModule:
    """The sum-zero submodule of the permutation module in the root basis
    a_i = e_i - e_{i+1}; integral, so defined in every characteristic."""
    n = group.degree
    dim = n - 1
    rho = []
    for p in group.perms:
        dod = {}
        for i in range(dim):
            # g(a_i) = e_{p(i)} - e_{p(i+1)}; the a-coordinate m is the partial sum up to m
            for m in range(dim):
                value = int(p[i] <= m) - int(p[i + 1] <= m)
                if value:
                    dod.setdefault(m, {})[i] = field.element(value)
        rho.append(Matrix.from_dod(dod, (dim, dim), field))
    return GModule(group=group, dim=dim, rho=rho, field=field, name="reflection")


def dual_module(module: GModule) -> GModule:
    """V* as a left module, g -> (rho(g)^{-1})^T; the right action f o rho(g) is
    recovered as rho*(g^{-1})."""
    group = module.group
    rho = [module.rho[group.inv(g)].transpose() for g in range(group.order)]
    return GModule(group=group, dim=module.dim, rho=rho, field=module.field, name=f"dual({module.name})")


def tensor_module(a: GModule, b: GModule) -> GModule:
    same_field(a.field, b.field, "tensor_module")
    if a.group is not b.group:
        raise InvalidStructureError("tensor module", "modules over different groups")
    rho = [x.kron(y) for x, y in zip(a.rho, b.rho)]
    return GModule(group=a.group, dim=a.dim * b.dim, rho=rho, field=a.field, name=f"{a.name}*{b.name}")


def tensor_power_module(module: GModule, n: int) -> GModule:
    power = module
    for _ in range(n - 1):
        power = tensor_module(power, module)
    return GModule(group=module.group, dim=power.dim, rho=power.rho, field=module.field, name=f"{module.name}^{n}")


def direct_sum(a: GModule, b: GModule) -> GModule:
    same_field(a.field, b.field, "direct_sum")
    rho = []
    for x, y in zip(a.rho, b.rho):
        dod = {i: dict(row) for i, row in x.dod().items()}
        for i, row in y.dod().items():
            dod[a.dim + i] = {a.dim + j: v for j, v in row.items()}
        rho.append(Matrix.from_dod(dod, (a.dim + b.dim, a.dim + b.dim), a.field))
    return GModule(group=a.group, dim=a.dim + b.dim, rho=rho, field=a.field, name=f"{a.name}+{b.name}")


def is_submodule(module: GModule, space: Subspace) -> bool:
    """Whether every generator maps the subspace into itself."""
    return all(space.contains(module.rho[s].apply(v)) for s in module.group.generator_ids for v in space.basis)


def stable_under(module: GModule, n: int, space: Subspace) -> bool:
    """Whether rho(s)^{(x)n} maps the subspace into itself for every generator s."""
    for s in module.group.generator_ids:
        op = tensor_power(module.rho[s], n)
        if not all(space.contains(op.apply(v)) for v in space.basis):
            logger.debug(f"Subspace of degree {n} moved by {module.group.label(s)}")
            return False
    return True
