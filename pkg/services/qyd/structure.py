from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

from loguru import logger

from core.exceptions import InvalidStructureError
from models.reports import CheckReport
from services.groups.fin_group import FinGroup
from services.linalg.field import FieldSpec, Scalar, ScalarInput
from services.linalg.matrix import Matrix
from services.modules.gmodule import GModule, character_module
from services.modules.yd_module import YDModule


@dataclass
class QYDStructure:
    """A quasi-Yetter-Drinfeld structure over kG.

    The quasicoaction is delta(v) = sum_h h (x) L_h(v); the pairing
    beta(f, v) = sum_h <f, L_h v> h is derived from the same maps.

    Attributes:
        module: the underlying G-module V
        L: element id -> endomorphism L_h of V (zero maps are not stored)
        name: descriptive name
    """
    module: GModule
    L: Dict[int, Matrix] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        self.L = {h: m for h, m in sorted(self.L.items()) if not m.is_zero()}
        for h, m in self.L.items():
            if m.shape != (self.dim, self.dim):
                raise InvalidStructureError("quasicoaction", f"L_{h} has shape {m.shape}")

    @classmethod
    def zero(cls, module: GModule) -> "QYDStructure":
        return cls(module=module, L={}, name="zero")

    @classmethod
    def from_yd(cls, y: YDModule) -> "QYDStructure":
        """The coaction of a YD module: L_h is the projector onto Y_h."""
        return cls(module=y.base, L=dict(y.grading), name=y.name)

    @property
    def group(self) -> FinGroup:
        return self.module.group

    @property
    def field(self) -> FieldSpec:
        return self.module.field

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def support(self) -> List[int]:
        return list(self.L)

    def L_of(self, h: int) -> Matrix:
        return self.L.get(h) or Matrix.zeros((self.dim, self.dim), self.field)

    def beta(self, a: int, b: int) -> Dict[int, Scalar]:
        """beta(f_a, v_b) as {group element: coefficient}."""
        out = {}
        for h, m in self.L.items():
            x = m.entry(a, b)
            if x:
                out[h] = x
        return out

    def sum_L(self) -> Matrix:
        total = Matrix.zeros((self.dim, self.dim), self.field)
        for m in self.L.values():
            total = total + m
        return total

    def delta_matrix(self) -> Matrix:
        """delta: V -> kG (x) V, row index h*dim + i."""
        dim = self.dim
        dod: Dict[int, Dict[int, Scalar]] = {}
        for h, m in self.L.items():
            for (i, b), x in m.items():
                dod.setdefault(h * dim + i, {})[b] = x
        return Matrix.from_dod(dod, (self.group.order * dim, dim), self.field)

    def right_delta_matrix(self) -> Matrix:
        """delta_r(f_j) = sum_h (f_j o L_h) (x) h: V* -> V* (x) kG, row index i*|G| + h."""
        order = self.group.order
        dod: Dict[int, Dict[int, Scalar]] = {}
        for h, m in self.L.items():
            for (j, i), x in m.items():
                dod.setdefault(i * order + h, {})[j] = x
        return Matrix.from_dod(dod, (self.dim * order, self.dim), self.field)

    def to_json(self) -> Dict[str, List[List]]:
        return {self.group.label(h): m.to_rows() for h, m in self.L.items()}

    def is_coaction(self) -> bool:
        """Whether the L_h are orthogonal idempotents summing to 1 (a YD grading)."""
        identity = Matrix.identity(self.dim, self.field)
        if self.sum_L() != identity:
            return False
        for h, p in self.L.items():
            if p @ p != p:
                return False
            for k, q in self.L.items():
                if k != h and not (p @ q).is_zero():
                    return False
        return True

    def as_yd_module(self) -> YDModule:
        if not self.is_coaction():
            raise InvalidStructureError("coaction", "L_h are not a complete family of orthogonal idempotents")
        return YDModule(base=self.module, grading=dict(self.L), name=self.name)


@dataclass
class SubquotientPair:
    """G-maps mu: V -> W and nu: W -> V exhibiting V as a subquotient of W.

    Attributes:
        source: the module V
        mu: matrix of V -> W
        nu: matrix of W -> V
    """
    source: GModule
    mu: Matrix
    nu: Matrix

    def compose(self, outer: "SubquotientPair") -> "SubquotientPair":
        """V -> W -> X from self (V in W) and outer (W in X)."""
        return SubquotientPair(source=self.source, mu=outer.mu @ self.mu, nu=self.nu @ outer.nu)


def qyd_check(q: QYDStructure) -> CheckReport:
    """g(L_h(v)) = L_{ghg^{-1}}(g(v)) for every g and every h with L_h != 0."""
    group = q.group
    zero = Matrix.zeros((q.dim, q.dim), q.field)
    for g in range(group.order):
        rho_g = q.module.rho[g]
        for h, m in q.L.items():
            k = group.conjugate(g, h)
            if rho_g @ m != q.L.get(k, zero) @ rho_g:
                logger.debug(f"YD condition fails at g={group.label(g)}, h={group.label(h)}")
                return CheckReport.fail("qyd", {"g": group.label(g), "h": group.label(h)})
    return CheckReport.ok("qyd", support=[group.label(h) for h in q.L])


def require_qyd(q: QYDStructure) -> None:
    report = qyd_check(q)
    if not report.passed:
        raise InvalidStructureError("quasi-YD structure", "YD condition fails", report.witness)


def delta_is_intertwiner(q: QYDStructure) -> bool:
    """delta: V -> Y(V) commutes with the actions."""
    y, pair = build_YV(q, check=False)
    return all(y.base.rho[g] @ pair.mu == pair.mu @ q.module.rho[g] for g in range(q.group.order))


def build_YV(q: QYDStructure, check: bool = True) -> Tuple[YDModule, SubquotientPair]:
    """Y(V) = kG (x) V with g(x (x) v) = gxg^{-1} (x) g(v), graded by the left leg;
    returns it with mu = delta and nu = epsilon (x) id."""
    if check:
        require_qyd(q)
    group, field, dim = q.group, q.field, q.dim
    order = group.order
    rho = []
    for g in range(order):
        conj = Matrix.permutation([group.conjugate(g, x) for x in range(order)], field)
        rho.append(conj.kron(q.module.rho[g]))
    base = GModule(group=group, dim=order * dim, rho=rho, field=field, name=f"Y({q.module.name})")
    y = YDModule.from_degrees(base, [x for x in range(order) for _ in range(dim)], name=base.name)
    one = field.one
    nu = Matrix.from_dod({i: {x * dim + i: one for x in range(order)} for i in range(dim)}, (dim, order * dim), field)
    return y, SubquotientPair(source=q.module, mu=q.delta_matrix(), nu=nu)


def induce_subquotient(w: QYDStructure, pair: SubquotientPair) -> QYDStructure:
    """L^V_h = nu L^W_h mu."""
    pair.source.require_intertwiner(w.module, pair.mu, "mu")
    w.module.require_intertwiner(pair.source, pair.nu, "nu")
    L = {h: pair.nu @ m @ pair.mu for h, m in w.L.items()}
    result = QYDStructure(module=pair.source, L=L, name=f"subquotient({w.name})")
    require_qyd(result)
    return result


def yd_as_qyd(y: YDModule) -> QYDStructure:
    return QYDStructure.from_yd(y)


def mix_structures(parts: Sequence[Tuple[ScalarInput, QYDStructure]]) -> QYDStructure:
    """L_h = sum_k t_k L^(k)_h over one common module."""
    if not parts:
        raise InvalidStructureError("mixture", "no parts given")
    module = parts[0][1].module
    field = module.field
    L: Dict[int, Matrix] = {}
    for coefficient, q in parts:
        if q.module is not module and q.module.rho != module.rho:
            raise InvalidStructureError("mixture", "parts live on different modules")
        t = field.element(coefficient)
        for h, m in q.L.items():
            scaled = m.scale(t)
            L[h] = L[h] + scaled if h in L else scaled
    return QYDStructure(module=module, L=L, name="mixture")


def classify_1dim_check(
    group: FinGroup, alpha: Sequence[ScalarInput], p: Mapping[int, ScalarInput], field: FieldSpec
) -> CheckReport:
    """(alpha, p) with alpha a character and p central in kG gives the 1-dim
    quasi-YD module h.v = alpha(h) v, delta(v) = p (x) v."""
    values = [field.element(a) for a in alpha]
    for g in range(group.order):
        for h in range(group.order):
            if values[g] * values[h] != values[group.mul(g, h)]:
                return CheckReport.fail("classify_1dim", {"reason": "alpha not multiplicative", "g": group.label(g), "h": group.label(h)})
    coefficients = {h: field.element(c) for h, c in p.items()}
    coefficients = {h: c for h, c in coefficients.items() if c}
    for g in range(group.order):
        for h, c in coefficients.items():
            if coefficients.get(group.conjugate(g, h)) != c:
                return CheckReport.fail("classify_1dim", {"reason": "p not central", "g": group.label(g), "h": group.label(h)})
    module = character_module(group, [field.to_sympy(v) for v in values], field, name="alpha")
    q = QYDStructure(module=module, L={h: Matrix.scalar(1, c, field) for h, c in coefficients.items()}, name="one-dimensional")
    report = qyd_check(q)
    if not report.passed:
        raise InvalidStructureError("one-dimensional structure", "central p failed the YD condition", report.witness)
    is_yd = len(coefficients) == 1 and next(iter(coefficients.values())) == field.one
    return CheckReport.ok("classify_1dim", yetter_drinfeld=is_yd, support=[group.label(h) for h in sorted(coefficients)])
