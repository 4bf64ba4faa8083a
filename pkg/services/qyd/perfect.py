from typing import List

from loguru import logger

from models.reports import CheckReport
from services.braided.operators import braided_factorial
from services.braided.quasibraided import left_relations, quasibraided_factorial, right_relations
from services.linalg.matrix import Matrix
from services.linalg.tensor import tensor_power
from services.modules.gmodule import dual_module
from .structure import QYDStructure, SubquotientPair, build_YV, delta_is_intertwiner, qyd_check


def subquotient_identity_holds(v: QYDStructure, w: QYDStructure, pair: SubquotientPair) -> bool:
    """delta_V = (id (x) nu) delta_W mu, i.e. L^V_h = nu L^W_h mu for all h."""
    for h in set(v.L) | set(w.L):
        if v.L_of(h) != pair.nu @ w.L_of(h) @ pair.mu:
            return False
    return True


def perfect_subquotient_check(v: QYDStructure, w: QYDStructure, pair: SubquotientPair, N: int) -> CheckReport:
    """V is a perfect subquotient of W when I_n(V) is the preimage of I_n(W) under mu^{(x)n}."""
    if not subquotient_identity_holds(v, w, pair):
        return CheckReport.fail("perfect_subquotient", {"reason": "delta_V != (id (x) nu) delta_W mu"})
    order = v.group.order
    id_h = Matrix.identity(order, v.field)
    own = left_relations(v, N)
    outer = left_relations(w, N)
    dims: List[dict] = []
    perfect = True
    for n in range(1, N + 1):
        mu_n = tensor_power(pair.mu, n)
        preimage = outer[n].preimage(mu_n)
        if not own[n].contains_subspace(preimage):
            return CheckReport.fail("perfect_subquotient", {"reason": "preimage not contained in I_n(V)", "degree": n})
        squeeze = tensor_power(id_h.kron(pair.nu), n)
        if squeeze @ quasibraided_factorial(w, n, check=False).matrix @ mu_n != quasibraided_factorial(v, n, check=False).matrix:
            return CheckReport.fail("perfect_subquotient", {"reason": "factorial identity", "degree": n})
        perfect = perfect and preimage == own[n]
        dims.append({"degree": n, "relations": own[n].dim, "preimage": preimage.dim})
    logger.info(f"Subquotient {v.name or 'V'} of {w.name or 'W'}: perfect up to degree {N}: {perfect}")
    if not perfect:
        return CheckReport.fail("perfect_subquotient", {"reason": "I(V) strictly larger than the preimage"}, degrees=dims)
    return CheckReport.ok("perfect_subquotient", degrees=dims)


def right_subquotient(pair: SubquotientPair) -> SubquotientPair:
    """The dual pair V* -> W* -> V* given by (nu^T, mu^T)."""
    return SubquotientPair(source=dual_module(pair.source), mu=pair.nu.transpose(), nu=pair.mu.transpose())


def right_perfect_subquotient_check(v: QYDStructure, w: QYDStructure, pair: SubquotientPair, N: int) -> CheckReport:
    """The right relations of V* are the preimage of those of W* under nu^T."""
    if not subquotient_identity_holds(v, w, pair):
        return CheckReport.fail("right_perfect_subquotient", {"reason": "delta_V != (id (x) nu) delta_W mu"})
    dual = right_subquotient(pair)
    own = right_relations(v, N)
    outer = right_relations(w, N)
    dims: List[dict] = []
    for n in range(1, N + 1):
        preimage = outer[n].preimage(tensor_power(dual.mu, n))
        if preimage != own[n]:
            return CheckReport.fail("right_perfect_subquotient", {"degree": n, "relations": own[n].dim, "preimage": preimage.dim})
        dims.append({"degree": n, "relations": own[n].dim})
    return CheckReport.ok("right_perfect_subquotient", degrees=dims)


def yd_intertwiner_check(q: QYDStructure) -> CheckReport:
    """delta: V -> Y(V) is a G-map exactly when the YD condition holds."""
    intertwines = delta_is_intertwiner(q)
    condition = qyd_check(q).passed
    if intertwines != condition:
        return CheckReport.fail("yd_intertwiner", {"intertwiner": intertwines, "qyd": condition})
    return CheckReport.ok("yd_intertwiner", intertwiner=intertwines, qyd=condition)


def yv_factorial_identity(q: QYDStructure, N: int) -> CheckReport:
    """[n]!~_delta = [n]!_Psi(Y(V)) o delta^{(x)n} for n = 1..N."""
    y, pair = build_YV(q)
    psi = y.braiding()
    for n in range(1, N + 1):
        lhs = quasibraided_factorial(q, n, check=False).matrix
        rhs = braided_factorial(psi, n).matrix @ tensor_power(pair.mu, n)
        if lhs != rhs:
            return CheckReport.fail("yv_factorial", {"degree": n})
    return CheckReport.ok("yv_factorial", degrees=N)
