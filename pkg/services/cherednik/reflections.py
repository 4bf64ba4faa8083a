from dataclasses import dataclass
from typing import Dict, List

from loguru import logger

from core.exceptions import InvalidStructureError
from models.reports import CheckReport
from services.linalg.field import Scalar
from services.linalg.matrix import Matrix, SparseVector
from services.modules.gmodule import GModule


@dataclass(frozen=True)
class ReflectionData:
    """A complex reflection s with s(v) = v - <root, v> coroot.

    Attributes:
        element: group element id of s
        class_index: index of its conjugacy class
        coroot: vector in V, first nonzero coordinate equal to 1
        root: covector on V, determined by 1 - rho(s) = coroot root^T
    """
    element: int
    class_index: int
    coroot: tuple
    root: tuple

    def pair_root(self, v: int) -> Scalar:
        """<root, v_b> for a basis vector."""
        return self.root[v]

    def outer(self, field) -> Matrix:
        entries = {(i, j): x * y for i, x in enumerate(self.coroot) for j, y in enumerate(self.root) if x and y}
        return Matrix.from_dod(_dod(entries), (len(self.coroot), len(self.root)), field)


def _dod(entries: Dict) -> Dict[int, Dict[int, Scalar]]:
    out: Dict[int, Dict[int, Scalar]] = {}
    for (i, j), x in entries.items():
        out.setdefault(i, {})[j] = x
    return out


def find_reflections(m: GModule) -> List[ReflectionData]:
    """Elements g != e with rank(1 - rho(g)) = 1, in element order."""
    group, fld = m.group, m.field
    identity = Matrix.identity(m.dim, fld)
    classes = group.conjugacy_classes()
    class_of = {x: k for k, cls in enumerate(classes) for x in cls.members}
    found = []
    for g in range(group.order):
        if g == group.identity:
            continue
        a = identity - m.rho[g]
        if a.rank() != 1:
            continue
        columns = a.columns()
        j0 = next(j for j, col in enumerate(columns) if col)
        column = columns[j0]
        i0 = min(column)
        scale = column[i0]
        coroot = tuple(fld.domain.quo(column.get(i, fld.zero), scale) for i in range(m.dim))
        row = a.row(i0)
        root = tuple(row.get(j, fld.zero) for j in range(m.dim))
        found.append(ReflectionData(element=g, class_index=class_of[g], coroot=coroot, root=root))
    logger.info(f"Found {len(found)} reflections in {group.name or 'group'} on {m.name or 'V'}")
    return found


def reflection_lookup(reflections: List[ReflectionData]) -> Dict[int, ReflectionData]:
    return {r.element: r for r in reflections}


def cocycle(m: GModule, reflections: List[ReflectionData], g: int, s: int) -> Scalar:
    """lambda(g, s) with g(coroot_s) = lambda(g, s) coroot_{g s g^-1}."""
    lookup = reflection_lookup(reflections)
    source = lookup[s]
    target = lookup[m.group.conjugate(g, s)]
    image = m.rho[g].apply(coroot_vector(source))
    pivot = next(i for i, x in enumerate(target.coroot) if x)
    value = image.get(pivot, m.field.zero)
    if not value:
        raise InvalidStructureError("reflection data", "conjugate coroot is not proportional", {"g": m.group.label(g), "s": m.group.label(s)})
    return value


def covariance_check(m: GModule, reflections: List[ReflectionData]) -> CheckReport:
    """g (coroot_s (x) root_s) g^-1 = coroot_t (x) root_t with t = g s g^-1, and
    s(v) = v - <root, v> coroot."""
    group, fld = m.group, m.field
    lookup = reflection_lookup(reflections)
    identity = Matrix.identity(m.dim, fld)
    for r in reflections:
        if m.rho[r.element] != identity - r.outer(fld):
            return CheckReport.fail("reflection_covariance", {"s": group.label(r.element), "reason": "reflection formula"})
    for g in group.generator_ids:
        g_inv = group.inv(g)
        for r in reflections:
            t = group.conjugate(g, r.element)
            if t not in lookup:
                return CheckReport.fail("reflection_covariance", {"g": group.label(g), "s": group.label(r.element), "reason": "conjugate is not a reflection"})
            if m.rho[g] @ r.outer(fld) @ m.rho[g_inv] != lookup[t].outer(fld):
                return CheckReport.fail("reflection_covariance", {"g": group.label(g), "s": group.label(r.element)})
    return CheckReport.ok("reflection_covariance", reflections=len(reflections))


def coroot_vector(r: ReflectionData) -> SparseVector:
    return {i: x for i, x in enumerate(r.coroot) if x}
