from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from loguru import logger

from core.exceptions import DegenerateParameterError, InvalidStructureError
from models.reports import CheckReport
from services.braided.quasibraided import left_relations, right_relations
from services.doubles.double import DoubleEngine, DoubleSpec, NormalFormElement, accumulate
from services.doubles.relations import symmetric_ideal
from services.linalg.field import Scalar
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.linalg.tensor import tensor_power
from services.modules.gmodule import GModule, direct_sum, dual_module
from services.modules.yd_module import YDModule
from services.qyd.perfect import perfect_subquotient_check, right_perfect_subquotient_check
from services.qyd.structure import QYDStructure, SubquotientPair, induce_subquotient
from .algebra import CherednikParams, delta_tc
from .reflections import ReflectionData, cocycle, find_reflections
from .restricted import coinvariant_relations


@dataclass
class ReflectionYD:
    """Y_G spanned by symbols [s], s a reflection, with g([s]) = lambda(g, s)[gsg^-1]
    and [s] in degree s; Y_Pi = V_1 + Y_G with V in degree e.

    Attributes:
        reflections: the reflections, in the order of the basis of Y_G
        y_g: the Yetter-Drinfeld module Y_G
        y_pi: V_1 + Y_G
        cocycle: report on lambda(gh, s) = lambda(g, hsh^-1) lambda(h, s)
    """
    reflections: List[ReflectionData]
    y_g: YDModule
    y_pi: YDModule
    cocycle: CheckReport

    def position(self, s: int) -> int:
        return next(k for k, r in enumerate(self.reflections) if r.element == s)


def cocycle_check(m: GModule, reflections: List[ReflectionData]) -> CheckReport:
    group = m.group
    for g in range(group.order):
        for h in range(group.order):
            for r in reflections:
                s = r.element
                lhs = cocycle(m, reflections, group.mul(g, h), s)
                rhs = cocycle(m, reflections, g, group.conjugate(h, s)) * cocycle(m, reflections, h, s)
                if lhs != rhs:
                    return CheckReport.fail("cocycle", {"g": group.label(g), "h": group.label(h), "s": group.label(s)})
    return CheckReport.ok("cocycle", reflections=len(reflections))


def build_reflection_yd(m: GModule, reflections: Optional[List[ReflectionData]] = None) -> ReflectionYD:
    reflections = find_reflections(m) if reflections is None else reflections
    group, fld = m.group, m.field
    if not reflections:
        raise InvalidStructureError("reflection module", "the group has no reflections on this module")
    position = {r.element: k for k, r in enumerate(reflections)}
    size = len(reflections)
    rho = []
    for g in range(group.order):
        dod: Dict[int, Dict[int, Scalar]] = {}
        for r in reflections:
            target = position[group.conjugate(g, r.element)]
            dod.setdefault(target, {})[position[r.element]] = cocycle(m, reflections, g, r.element)
        rho.append(Matrix.from_dod(dod, (size, size), fld))
    base = GModule(group=group, dim=size, rho=rho, field=fld, name=f"Y_{group.name or 'G'}")
    module_report = base.check()
    if not module_report.passed:
        raise InvalidStructureError("Y_G", "the cocycle action is not a representation", module_report.witness)
    y_g = YDModule.from_degrees(base, [r.element for r in reflections], name=base.name)
    pi_base = direct_sum(m, base)
    y_pi = YDModule.from_degrees(pi_base, [group.identity] * m.dim + [r.element for r in reflections], name=f"Y_Pi({group.name or 'G'})")
    logger.info(f"Built {y_g.name} of dimension {size}")
    return ReflectionYD(reflections=reflections, y_g=y_g, y_pi=y_pi, cocycle=cocycle_check(m, reflections))


def proportionality_scalar(m: GModule, values: Dict[int, Scalar]) -> Scalar:
    """kappa with sum_s c_s (1 - rho(s)) = kappa I."""
    fld = m.field
    identity = Matrix.identity(m.dim, fld)
    total = Matrix.zeros((m.dim, m.dim), fld)
    for s, c in values.items():
        total = total + (identity - m.rho[s]).scale(c)
    kappa = total.entry(0, 0)
    if total != Matrix.scalar(m.dim, kappa, fld):
        raise InvalidStructureError("reflection module", "sum_s c_s (1 - s) is not a scalar; V is not irreducible")
    if not kappa:
        raise DegenerateParameterError("c", "sum_s c_s (1 - s) vanishes, so t' is undefined")
    return kappa


def embedding_maps(m: GModule, data: ReflectionYD, values: Dict[int, Scalar]) -> Tuple[Matrix, Matrix]:
    """mu(v) = sum_s c_s <alpha_s, v> [s] and nu*(f) = sum_s <f, coroot_s> [s]*."""
    fld = m.field
    mu: Dict[int, Dict[int, Scalar]] = {}
    nu: Dict[int, Dict[int, Scalar]] = {}
    for k, r in enumerate(data.reflections):
        c = values[r.element]
        for b, x in enumerate(r.root):
            if x and c:
                mu.setdefault(k, {})[b] = c * x
        for j, x in enumerate(r.coroot):
            if x:
                nu.setdefault(k, {})[j] = x
    shape = (len(data.reflections), m.dim)
    return Matrix.from_dod(mu, shape, fld), Matrix.from_dod(nu, shape, fld)


def target_structure(data: ReflectionYD, t_prime: Scalar) -> QYDStructure:
    """The coaction of Y_G deformed by t' at the identity."""
    y = data.y_g
    L = dict(y.grading)
    if t_prime:
        e = y.group.identity
        deformation = Matrix.scalar(y.dim, t_prime, y.field)
        L[e] = L[e] + deformation if e in L else deformation
    return QYDStructure(module=y.base, L=L, name=f"{y.name}, t'={y.field.to_json(t_prime)}")


def _antisymmetrised(vectors: List[Dict[int, Scalar]], dim: int) -> List[Dict[int, Scalar]]:
    out = []
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            tensor: Dict[int, Scalar] = {}
            for i, x in vectors[a].items():
                for j, y in vectors[b].items():
                    accumulate(tensor, i * dim + j, x * y)
                    accumulate(tensor, j * dim + i, -x * y)
            out.append(tensor)
    return out


def _injective(source: Subspace, target: Subspace, op: Matrix) -> bool:
    return (target.quotient_map() @ op @ source.section()).rank() == source.codim


def embed_Mc_check(m: GModule, params: CherednikParams, N: int) -> CheckReport:
    """Checks that v -> mu(v), f -> nu*(f), g -> g defines an injective homomorphism
    from H_{t,c}(G) (restricted when t = 0) into the double of Y_G with L_e = t' I."""
    fld, group = m.field, m.group
    reflections = find_reflections(m)
    values = params.values(m, reflections)
    data = build_reflection_yd(m, reflections)
    t = params.t_value(fld)
    t_prime = fld.zero
    if t:
        try:
            kappa = proportionality_scalar(m, values)
        except DegenerateParameterError as e:
            logger.warning(f"Embedding not asserted: {e.message}")
            return CheckReport.fail("embedding", {"reason": "degenerate c"}, degenerate=True)
        t_prime = fld.domain.quo(t, kappa)
    target = target_structure(data, t_prime)
    mu, nu_star = embedding_maps(m, data, values)
    y = data.y_g
    details: Dict[str, object] = {"t_prime": fld.to_json(t_prime), "target_dim": y.dim}
    if t:
        details["kappa"] = fld.to_json(kappa)

    for g in group.generator_ids:
        if y.base.rho[g] @ mu != mu @ m.rho[g]:
            return CheckReport.fail("embedding", {"reason": "mu is not G-equivariant", "g": group.label(g)}, **details)
        if nu_star @ m.rho[g].transpose() != y.base.rho[g].transpose() @ nu_star:
            return CheckReport.fail("embedding", {"reason": "nu* is not G-equivariant", "g": group.label(g)}, **details)

    # (i) images of V, and of V*, commute in the target
    depth = min(3, N)
    top = max(depth, 2)
    target_left = left_relations(target, top)
    target_right = right_relations(target, top)
    images = [mu.column(b) for b in range(m.dim)]
    co_images = [nu_star.column(a) for a in range(m.dim)]
    for side, vectors, space in (("left", images, target_left[2]), ("right", co_images, target_right[2])):
        for tensor in _antisymmetrised(vectors, y.dim):
            if not space.contains(tensor):
                return CheckReport.fail("embedding", {"reason": "images do not commute", "side": side}, **details)

    # (ii) the commutator of images is the Cherednik commutator
    source = delta_tc(m, params)
    engine = DoubleEngine(DoubleSpec.free(target, 1))
    e = group.identity
    for a in range(m.dim):
        f_image = NormalFormElement(fld, {((), e, (k,)): x for k, x in co_images[a].items()})
        for b in range(m.dim):
            v_image = NormalFormElement(fld, {((k,), e, ()): x for k, x in images[b].items()})
            bracket = engine.commutator(f_image, v_image)
            if bracket.group_part() != source.beta(a, b) or any(left or right for (left, _, right) in bracket.terms):
                return CheckReport.fail("embedding", {"reason": "commutator mismatch", "f": a + 1, "v": b + 1}, **details)

    # (iii) injectivity on low degrees
    if t:
        own_left = symmetric_ideal(m.dim, fld, depth)
        own_right = own_left
    else:
        own_left = coinvariant_relations(m, depth)
        own_right = coinvariant_relations(dual_module(m), depth)
    for n in range(1, depth + 1):
        if not _injective(own_left[n], target_left[n], tensor_power(mu, n)):
            return CheckReport.fail("embedding", {"reason": "not injective", "side": "left", "degree": n}, **details)
        if not _injective(own_right[n], target_right[n], tensor_power(nu_star, n)):
            return CheckReport.fail("embedding", {"reason": "not injective", "side": "right", "degree": n}, **details)
    logger.info(f"Embedding into the double of {y.name} holds up to degree {depth}")
    return CheckReport.ok("embedding", degrees=depth, **details)


def reflection_subquotient(m: GModule, params: CherednikParams) -> Tuple[ReflectionYD, SubquotientPair]:
    """Y_Pi with mu(v) = tv + sum_s c_s <alpha_s, v> [s] and nu(v + [s]) = v + coroot_s."""
    fld = m.field
    reflections = find_reflections(m)
    values = params.values(m, reflections)
    data = build_reflection_yd(m, reflections)
    mu, nu_star = embedding_maps(m, data, values)
    t = params.t_value(fld)
    pair = SubquotientPair(
        source=m,
        mu=Matrix.scalar(m.dim, t, fld).vstack(mu),
        nu=Matrix.identity(m.dim, fld).hstack(nu_star.transpose()),
    )
    return data, pair


def embed_Pi_check(m: GModule, params: CherednikParams, N: int) -> CheckReport:
    """(V, delta_{t,c}) is a perfect subquotient of the Yetter-Drinfeld module Y_Pi."""
    data, pair = reflection_subquotient(m, params)
    for name, y in (("Y_G", data.y_g), ("Y_Pi", data.y_pi)):
        report = y.check()
        if not report.passed:
            return CheckReport.fail("embed_pi", {"reason": f"{name} is not Yetter-Drinfeld", "at": report.witness})
    w = QYDStructure.from_yd(data.y_pi)
    source = delta_tc(m, params)
    if induce_subquotient(w, pair).L != source.L:
        return CheckReport.fail("embed_pi", {"reason": "induced structure differs from delta_tc"})
    depth = min(3, N)
    for perfect in (perfect_subquotient_check(source, w, pair, depth), right_perfect_subquotient_check(source, w, pair, depth)):
        if not perfect.passed:
            return CheckReport.fail("embed_pi", {"check": perfect.check, **(perfect.witness or {})}, target_dim=data.y_pi.dim)
    return CheckReport.ok("embed_pi", degrees=depth, target_dim=data.y_pi.dim)
