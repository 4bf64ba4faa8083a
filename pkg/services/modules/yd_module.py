from dataclasses import dataclass
from typing import Dict, Sequence

from core.exceptions import InvalidStructureError
from models.reports import CheckReport
from services.linalg.matrix import Matrix
from services.linalg.tensor import flip
from .gmodule import GModule


@dataclass
class YDModule:
    """A Yetter-Drinfeld module over kG: a G-module graded by G.

    Attributes:
        base: the underlying G-module
        grading: element id -> projector onto the component Y_h (nonzero ones only)
        name: descriptive name
    """
    base: GModule
    grading: Dict[int, Matrix]
    name: str = ""

    @classmethod
    def from_degrees(cls, base: GModule, degrees: Sequence[int], name: str = "") -> "YDModule":
        """Coordinate grading: basis vector i lies in Y_{degrees[i]}."""
        field = base.field
        buckets: Dict[int, Dict[int, Dict[int, object]]] = {}
        for i, h in enumerate(degrees):
            buckets.setdefault(h, {})[i] = {i: field.one}
        grading = {h: Matrix.from_dod(dod, (base.dim, base.dim), field) for h, dod in sorted(buckets.items())}
        return cls(base=base, grading=grading, name=name or base.name)

    @classmethod
    def trivially_graded(cls, base: GModule) -> "YDModule":
        return cls(base=base, grading={0: Matrix.identity(base.dim, base.field)}, name=base.name)

    @property
    def dim(self) -> int:
        return self.base.dim

    @property
    def group(self):
        return self.base.group

    @property
    def field(self):
        return self.base.field

    def check(self) -> CheckReport:
        """Idempotent, orthogonal, complete projectors and rho(g) P_h rho(g)^{-1} = P_{ghg^{-1}}."""
        group = self.group
        field = self.field
        zero = Matrix.zeros((self.dim, self.dim), field)
        total = zero
        for h, p in self.grading.items():
            if p @ p != p:
                return CheckReport.fail("yd_module", {"h": group.label(h), "axiom": "idempotent"})
            for k, q in self.grading.items():
                if k != h and not (p @ q).is_zero():
                    return CheckReport.fail("yd_module", {"h": group.label(h), "k": group.label(k), "axiom": "orthogonal"})
            total = total + p
        if total != Matrix.identity(self.dim, field):
            return CheckReport.fail("yd_module", {"axiom": "complete"})
        for g in range(group.order):
            rho_g = self.base.rho[g]
            for h, p in self.grading.items():
                target = self.grading.get(group.conjugate(g, h), zero)
                if rho_g @ p != target @ rho_g:
                    return CheckReport.fail(
                        "yd_module", {"g": group.label(g), "h": group.label(h), "axiom": "conjugation"}
                    )
        return CheckReport.ok("yd_module", dim=self.dim, support=[group.label(h) for h in sorted(self.grading)])

    def braiding(self) -> Matrix:
        """Psi(y (x) z) = h(z) (x) y for y in Y_h."""
        report = self.check()
        if not report.passed:
            raise InvalidStructureError("Yetter-Drinfeld module", "grading axioms fail", report.witness)
        field = self.field
        total = Matrix.zeros((self.dim ** 2, self.dim ** 2), field)
        for h, p in self.grading.items():
            total = total + p.kron(self.base.rho[h])
        return flip(self.dim, self.dim, field) @ total
