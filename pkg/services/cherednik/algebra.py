from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy
from loguru import logger
from sympy import Poly

from core.exceptions import (
    DivisionRemainderError,
    InvalidStructureError,
    MissingClassParameterError,
    TriangularityError,
)
from models.reports import CheckReport
from services.doubles.double import DoubleEngine, DoubleSpec, GeneratorKind, accumulate
from services.doubles.relations import symmetric_ideal, triangular_ideal_check
from services.linalg.field import FieldSpec, Scalar, ScalarInput
from services.linalg.matrix import Matrix
from services.modules.gmodule import GModule
from services.qyd.structure import QYDStructure, require_qyd
from .reflections import ReflectionData, find_reflections

# exponent vector of a monomial in S(V*)
Exponents = Tuple[int, ...]
# (group element, exponents) -> coefficient, an element of kG (x) S(V*)
GroupPolynomial = Dict[Tuple[int, Exponents], Scalar]


@dataclass
class CherednikParams:
    """Parameters (t, c) of H_{t,c}(G).

    Attributes:
        t: the scalar t
        c: conjugacy class index -> c for that class of reflections
        default_c: value used for every reflection class missing from c
    """
    t: ScalarInput = 0
    c: Dict[int, ScalarInput] = field(default_factory=dict)
    default_c: Optional[ScalarInput] = None

    @classmethod
    def uniform(cls, t: ScalarInput, c: ScalarInput) -> "CherednikParams":
        return cls(t=t, c={}, default_c=c)

    @classmethod
    def from_elements(cls, m: GModule, t: ScalarInput, values: Mapping[int, ScalarInput]) -> "CherednikParams":
        """Per-element c, accepted only when constant on conjugacy classes."""
        group, fld = m.group, m.field
        per_class: Dict[int, Scalar] = {}
        for r in find_reflections(m):
            x = fld.element(values.get(r.element, 0))
            if r.class_index in per_class and per_class[r.class_index] != x:
                raise InvalidStructureError("Cherednik parameters", "c is not constant on a conjugacy class", {"s": group.label(r.element)})
            per_class[r.class_index] = x
        return cls(t=t, c=per_class)

    def t_value(self, fld: FieldSpec) -> Scalar:
        return fld.element(self.t)

    def values(self, m: GModule, reflections: Sequence[ReflectionData]) -> Dict[int, Scalar]:
        """c_s for every reflection s."""
        group, fld = m.group, m.field
        out = {}
        for r in reflections:
            if r.class_index in self.c:
                out[r.element] = fld.element(self.c[r.class_index])
            elif self.default_c is not None:
                out[r.element] = fld.element(self.default_c)
            else:
                raise MissingClassParameterError(group.label(r.element))
        return out


def delta_from_values(m: GModule, t: Scalar, values: Mapping[int, Scalar], name: str = "") -> QYDStructure:
    """L_e = t I and L_s = c_s (1 - rho(s)) for the given per-element values,
    with no equivariance check."""
    fld = m.field
    identity = Matrix.identity(m.dim, fld)
    L: Dict[int, Matrix] = {}
    if t:
        L[m.group.identity] = Matrix.scalar(m.dim, t, fld)
    for s, c in values.items():
        if c:
            L[s] = (identity - m.rho[s]).scale(c)
    return QYDStructure(module=m, L=L, name=name or "delta_tc")


def delta_tc(m: GModule, params: CherednikParams) -> QYDStructure:
    """delta_{t,c}(v) = 1 (x) tv + sum_s c_s s (x) (v - s(v))."""
    reflections = find_reflections(m)
    fld = m.field
    t = params.t_value(fld)
    q = delta_from_values(m, t, params.values(m, reflections), name=f"delta_{fld.to_json(t)},c({m.name})")
    require_qyd(q)
    return q


def delta_tc_shape(m: GModule, q: QYDStructure) -> Optional[Dict[str, object]]:
    """(t, c) when q = delta_{t,c} with class-constant c, otherwise None."""
    group, fld = m.group, m.field
    identity = Matrix.identity(m.dim, fld)
    reflections = {r.element: r for r in find_reflections(m)}
    t = fld.zero
    if group.identity in q.L:
        l_e = q.L[group.identity]
        t = l_e.entry(0, 0)
        if l_e != Matrix.scalar(m.dim, t, fld):
            return None
    c: Dict[int, Scalar] = {}
    for h, l_h in q.L.items():
        if h == group.identity:
            continue
        if h not in reflections:
            return None
        a = identity - m.rho[h]
        (i, j), x = next(iter(a.items()))
        ratio = fld.domain.quo(l_h.entry(i, j), x)
        if a.scale(ratio) != l_h:
            return None
        c[h] = ratio
    for s, r in reflections.items():
        for other in group.conjugacy_classes()[r.class_index].members:
            if c.get(other, fld.zero) != c.get(s, fld.zero):
                return None
    return {"t": t, "c": {s: c.get(s, fld.zero) for s in reflections}}


def irreducibility_report(m: GModule, assume_irreducible: bool = False) -> CheckReport:
    """Absolute irreducibility from a one-dimensional commutant in characteristic 0;
    in characteristic p only the assumption flag counts."""
    commutant = m.commutant_dimension()
    if m.field.characteristic == 0:
        if commutant != 1:
            return CheckReport.fail("irreducibility", {"commutant_dimension": commutant})
        return CheckReport.ok("irreducibility", commutant_dimension=commutant, verified=True)
    if not assume_irreducible:
        logger.warning(f"Irreducibility of {m.name or 'V'} over {m.field} is not verified; set assume_irreducible")
        return CheckReport.fail("irreducibility", {"reason": "unverified in positive characteristic"}, commutant_dimension=commutant)
    return CheckReport.ok("irreducibility", commutant_dimension=commutant, verified=False, assumed=True)


def _left_identity_tensor(q: QYDStructure, h: int, a: int, b: int) -> Dict[Tuple[int, int, int], Scalar]:
    """delta(v_a - h(v_a)) (x) L_h(v_b)."""
    u = (Matrix.identity(q.dim, q.field) - q.module.rho[h]).column(a)
    tail = q.L_of(h).column(b)
    out = {}
    for k, l_k in q.L.items():
        for i, x in l_k.apply(u).items():
            for j, y in tail.items():
                out[(k, i, j)] = x * y
    return out


def _right_identity_tensor(q: QYDStructure, h: int, a: int, b: int) -> Dict[Tuple[int, int, int], Scalar]:
    """delta_r(f_a - f_a < h) (x) (f_b o L_h)."""
    u = (Matrix.identity(q.dim, q.field) - q.module.rho[h]).row(a)
    tail = q.L_of(h).row(b)
    out = {}
    for k, l_k in q.L.items():
        for i, x in l_k.transpose().apply(u).items():
            for j, y in tail.items():
                out[(i, k, j)] = x * y
    return out


def _symmetric_side(q: QYDStructure, tensor) -> Optional[Dict[str, object]]:
    for h in q.L:
        for a in range(q.dim):
            for b in range(a + 1, q.dim):
                if tensor(q, h, a, b) != tensor(q, h, b, a):
                    return {"h": q.group.label(h), "pair": [a + 1, b + 1]}
    return None


def commutativity_classification_check(m: GModule, q: QYDStructure, assume_irreducible: bool = False) -> CheckReport:
    """U(V, delta) is commutative exactly when delta(v - h(v)) (x) L_h(w) is
    symmetric in v and w for every h; the right-handed identity governs U(V*, delta).
    Also reports whether q has the delta_{t,c} shape."""
    irreducible = irreducibility_report(m, assume_irreducible)
    left = _symmetric_side(q, _left_identity_tensor)
    right = _symmetric_side(q, _right_identity_tensor)
    shape = delta_tc_shape(m, q)
    fld = m.field
    details = {
        "left": left is None,
        "right": right is None,
        "delta_tc_shape": shape is not None,
        "irreducible": irreducible.passed,
        "commutant_dimension": irreducible.details.get("commutant_dimension"),
    }
    if shape is not None:
        details["t"] = fld.to_json(shape["t"])
        details["c"] = {m.group.label(s): fld.to_json(x) for s, x in shape["c"].items()}
    if left is not None:
        return CheckReport.fail("commutativity_classification", {"side": "left", **left}, **details)
    if right is not None:
        return CheckReport.fail("commutativity_classification", {"side": "right", **right}, **details)
    if not irreducible.passed:
        return CheckReport.fail("commutativity_classification", {"reason": "irreducibility"}, **details)
    return CheckReport.ok("commutativity_classification", **details)


def cherednik_algebra(m: GModule, params: CherednikParams, N: int) -> DoubleSpec:
    """H_{t,c}(G) = S(V) # kG # S(V*) truncated at N."""
    q = delta_tc(m, params)
    left = symmetric_ideal(m.dim, m.field, N)
    right = symmetric_ideal(m.dim, m.field, N)
    for side, spaces in (("left", left), ("right", right)):
        report = triangular_ideal_check(q, spaces, side)
        if not report.passed:
            raise TriangularityError(side, report.witness["degree"])
    fld = m.field
    name = f"H_{fld.to_json(params.t_value(fld))},c({m.group.name or 'G'})"
    logger.info(f"Built {name} over {fld} up to degree {N}")
    return DoubleSpec(qyd=q, truncation=N, left_relations=left, right_relations=right, name=name)


@dataclass
class DunklResult:
    """[phi, v] computed by straightening and by the divided-difference formula."""
    straightened: GroupPolynomial
    formula: GroupPolynomial

    @property
    def agree(self) -> bool:
        return self.straightened == self.formula

    def to_json(self, group, fld: FieldSpec) -> Dict[str, object]:
        def dump(terms: GroupPolynomial) -> List[Dict[str, object]]:
            return [
                {"g": group.label(h), "exponents": list(e), "coefficient": fld.to_json(x)}
                for (h, e), x in sorted(terms.items())
            ]
        return {"straightened": dump(self.straightened), "formula": dump(self.formula), "agree": self.agree}


def _exponents(word, dim: int) -> Exponents:
    counts = [0] * dim
    for letter in word:
        counts[letter] += 1
    return tuple(counts)


def _word(exponents: Exponents) -> Tuple[int, ...]:
    return tuple(j for j, e in enumerate(exponents) for _ in range(e))


def _straightened_commutator(spec: DoubleSpec, engine: DoubleEngine, phi: Mapping[Exponents, Scalar], v: int) -> GroupPolynomial:
    e = spec.group.identity
    element = engine.reduce_terms({((), e, _word(exps)): x for exps, x in phi.items()})
    bracket = engine.commutator(element, engine.generator((GeneratorKind.V, v)))
    out: GroupPolynomial = {}
    for (left, h, right), x in bracket.terms.items():
        if left:
            raise InvalidStructureError("Cherednik commutator", "a V-letter survived straightening")
        accumulate(out, (h, _exponents(right, spec.dim)), x)
    return out


def _to_terms(poly: Poly, fld: FieldSpec) -> Dict[Exponents, Scalar]:
    out = {}
    for monom, coeff in poly.terms():
        x = fld.element(coeff)
        if x:
            out[tuple(monom)] = x
    return out


def _formula_commutator(spec: DoubleSpec, shape: Dict[str, object], phi: Mapping[Exponents, Scalar], v: int) -> GroupPolynomial:
    """t d(phi)/dy_v + sum_s c_s <alpha_s, v> s (x) (phi - phi < s) / alpha_s."""
    fld = spec.field
    module = spec.qyd.module
    group = spec.group
    domain = fld.domain
    gens = sympy.symbols(f"y1:{spec.dim + 1}")
    poly = Poly.from_dict(dict(phi), *gens, domain=domain) if phi else Poly(0, *gens, domain=domain)
    out: GroupPolynomial = {}
    t = shape["t"]
    if t:
        for exps, x in _to_terms(poly.diff(gens[v]), fld).items():
            accumulate(out, (group.identity, exps), t * x)
    reflections = {r.element: r for r in find_reflections(module)}
    for s, c in shape["c"].items():
        r = reflections[s]
        weight = c * r.pair_root(v)
        if not weight:
            continue
        rho = module.rho[s]
        substitution = {
            gens[j]: sum((fld.to_sympy(x) * gens[i] for i, x in rho.row(j).items()), sympy.Integer(0))
            for j in range(spec.dim)
        }
        moved = Poly(poly.as_expr().xreplace(substitution), *gens, domain=domain)
        root = Poly(sum((fld.to_sympy(x) * gens[i] for i, x in enumerate(r.root) if x), sympy.Integer(0)), *gens, domain=domain)
        quotient, remainder = (poly - moved).div(root)
        if not remainder.is_zero:
            raise DivisionRemainderError(group.label(s), str(remainder.as_expr()))
        for exps, x in _to_terms(quotient, fld).items():
            accumulate(out, (s, exps), weight * x)
    return out


def dunkl_commutator(
    spec: DoubleSpec, phi: Mapping[Exponents, ScalarInput], v: int, engine: Optional[DoubleEngine] = None
) -> DunklResult:
    """[phi, v] for phi in S(V*) given as exponents -> coefficient, by both paths."""
    fld = spec.field
    values = {tuple(exps): fld.element(x) for exps, x in phi.items()}
    values = {exps: x for exps, x in values.items() if x}
    degree = max((sum(exps) for exps in values), default=0)
    spec.require_degree(degree)
    shape = delta_tc_shape(spec.qyd.module, spec.qyd)
    if shape is None:
        raise InvalidStructureError("Cherednik double", "the quasicoaction is not of the form delta_{t,c}")
    engine = engine or DoubleEngine(spec)
    result = DunklResult(
        straightened=_straightened_commutator(spec, engine, values, v),
        formula=_formula_commutator(spec, shape, values, v),
    )
    if not result.agree:
        logger.warning(f"Dunkl commutator paths disagree for v{v + 1}")
    return result


def dunkl_check(spec: DoubleSpec, degree: Optional[int] = None, engine: Optional[DoubleEngine] = None) -> CheckReport:
    """Both paths agree on every monomial of degree <= min(degree, N - 1) and every v."""
    engine = engine or DoubleEngine(spec)
    top = spec.truncation - 1 if degree is None else min(degree, spec.truncation - 1)
    checked = 0
    for n in range(top + 1):
        for word in spec.basis_words("right", n):
            exps = _exponents(word, spec.dim)
            for v in range(spec.dim):
                result = dunkl_commutator(spec, {exps: 1}, v, engine=engine)
                if not result.agree:
                    return CheckReport.fail("dunkl", {"exponents": list(exps), "v": v + 1}, **result.to_json(spec.group, spec.field))
                checked += 1
    return CheckReport.ok("dunkl", monomials_checked=checked, degree=top)


def commutator_relation_check(spec: DoubleSpec, engine: Optional[DoubleEngine] = None) -> CheckReport:
    """f.v - v.f = t<f, v> + sum_s c_s <f, (1 - s) v> s in the straightened algebra."""
    engine = engine or DoubleEngine(spec)
    q = spec.qyd
    for a in range(spec.dim):
        for b in range(spec.dim):
            bracket = engine.commutator(engine.generator((GeneratorKind.F, a)), engine.generator((GeneratorKind.V, b)))
            if bracket != engine.beta_element(a, b):
                return CheckReport.fail("commutator_relation", {"f": a + 1, "v": b + 1, "value": bracket.to_text(q.group)})
    return CheckReport.ok("commutator_relation", pairs=spec.dim * spec.dim)


def class_parameters(m: GModule, labels: Mapping[str, ScalarInput]) -> Dict[int, ScalarInput]:
    """Conjugacy class index -> c from a map keyed by any element label of the class."""
    group = m.group
    return {group.class_index(group.element(label)): value for label, value in labels.items()}
