from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from loguru import logger

from core.exceptions import InvalidStructureError
from models.reports import CheckReport
from services.linalg.field import Scalar
from services.linalg.matrix import Matrix
from services.linalg.tensor import Word
from services.modules.gmodule import GModule
from .double import DoubleEngine, DoubleSpec, accumulate


@dataclass
class StandardModule:
    """U- (x) L_rho truncated at degree N with the generator actions.

    Attributes:
        basis: (left word, index in L_rho), ordered by degree then word then index
        degrees: word length of each basis vector
        v: action of v_a, degree N is sent to zero
        f: action of f_a
        g: action of every group element
        report: module relations checked below the truncation
    """
    basis: List[Tuple[Word, int]]
    degrees: List[int]
    v: List[Matrix]
    f: List[Matrix]
    g: List[Matrix]
    report: Optional[CheckReport] = None

    def matrices(self, group) -> Dict[str, Matrix]:
        out = {f"v{a + 1}": m for a, m in enumerate(self.v)}
        out.update({f"f{a + 1}": m for a, m in enumerate(self.f)})
        out.update({group.label(x): m for x, m in enumerate(self.g)})
        return out


def standard_module_matrices(spec: DoubleSpec, rho: GModule, N: Optional[int] = None, engine: Optional[DoubleEngine] = None) -> StandardModule:
    """Matrices of V, G and V* on M_rho = U- (x) L_rho, where V* kills L_rho."""
    if rho.group is not spec.group and rho.group.order != spec.group.order:
        raise InvalidStructureError("standard module", "rho is a module for a different group")
    engine = engine or DoubleEngine(spec)
    top = spec.truncation if N is None else min(N, spec.truncation)
    fld = spec.field
    basis: List[Tuple[Word, int]] = []
    degrees: List[int] = []
    for n in range(top + 1):
        for word in spec.basis_words("left", n):
            for l in range(rho.dim):
                basis.append((word, l))
                degrees.append(n)
    position = {key: i for i, key in enumerate(basis)}
    size = len(basis)
    rho_columns = [m.columns() for m in rho.rho]

    def assemble(columns: List[Dict[int, Scalar]]) -> Matrix:
        return Matrix.from_columns(columns, size, fld)

    def push(out: Dict[int, Scalar], words: Dict[Word, Scalar], h: int, l: int, c: Scalar) -> None:
        for word, x in words.items():
            for l2, y in rho_columns[h][l].items():
                accumulate(out, position[(word, l2)], c * x * y)

    v_mats = []
    for a in range(spec.dim):
        columns = []
        for word, l in basis:
            out: Dict[int, Scalar] = {}
            if len(word) < top:
                push(out, engine.normal_word("left", (a,) + word), engine.identity, l, fld.one)
            columns.append(out)
        v_mats.append(assemble(columns))

    g_mats = []
    for x in range(spec.group.order):
        columns = []
        for word, l in basis:
            out = {}
            for moved, c in engine.act_left(x, word).items():
                push(out, engine.normal_word("left", moved), x, l, c)
            columns.append(out)
        g_mats.append(assemble(columns))

    f_mats = []
    for a in range(spec.dim):
        columns = []
        for word, l in basis:
            out = {}
            for (left, h, right), c in engine.letter_past_word(a, word).items():
                if right:
                    continue
                push(out, engine.normal_word("left", left), h, l, c)
            columns.append(out)
        f_mats.append(assemble(columns))

    module = StandardModule(basis=basis, degrees=degrees, v=v_mats, f=f_mats, g=g_mats)
    module.report = standard_module_check(spec, module, top)
    logger.info(f"Standard module of dimension {size} up to degree {top}: relations {'hold' if module.report.passed else 'fail'}")
    return module


def _columns_below(m: Matrix, degrees: List[int], top: int) -> bool:
    """Whether m vanishes on every basis vector of degree < top."""
    return all(not column for j, column in enumerate(m.columns()) if degrees[j] < top)


def standard_module_check(spec: DoubleSpec, module: StandardModule, top: int) -> CheckReport:
    """[f_a, v_b] = beta(f_a, v_b), g v_b g^-1 = g(v_b) and f_a g = g (f_a < g) on
    the basis vectors where the truncation does not interfere; G acts by a representation."""
    group, q = spec.group, spec.qyd
    degrees = module.degrees
    size = len(module.basis)
    zero = Matrix.zeros((size, size), spec.field)
    rho = q.module.rho
    for a in range(spec.dim):
        for b in range(spec.dim):
            expected = zero
            for h, x in q.beta(a, b).items():
                expected = expected + module.g[h].scale(x)
            diff = module.f[a] @ module.v[b] - module.v[b] @ module.f[a] - expected
            if not _columns_below(diff, degrees, top):
                return CheckReport.fail("standard_module", {"relation": "commutator", "f": a + 1, "v": b + 1})
    for x in range(group.order):
        x_inv = group.inv(x)
        for b in range(spec.dim):
            image = zero
            for i, c in rho[x].column(b).items():
                image = image + module.v[i].scale(c)
            diff = module.g[x] @ module.v[b] @ module.g[x_inv] - image
            if not _columns_below(diff, degrees, top):
                return CheckReport.fail("standard_module", {"relation": "conjugation", "g": group.label(x), "v": b + 1})
        for a in range(spec.dim):
            moved = zero
            for i, c in rho[x].row(a).items():
                moved = moved + module.f[i].scale(c)
            if module.f[a] @ module.g[x] != module.g[x] @ moved:
                return CheckReport.fail("standard_module", {"relation": "right action", "g": group.label(x), "f": a + 1})
        for y in range(group.order):
            if module.g[x] @ module.g[y] != module.g[group.mul(x, y)]:
                return CheckReport.fail("standard_module", {"relation": "group law", "g": group.label(x), "h": group.label(y)})
    return CheckReport.ok("standard_module", dimension=size, truncation=top)
