from typing import Dict, List, Mapping, Optional, Tuple

from loguru import logger

from models.reports import CheckReport
from services.braided.quasibraided import (
    left_relations,
    quasibraided_integer,
    right_quasibraided_integer,
    right_relations,
)
from services.linalg.field import FieldSpec
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.linalg.tensor import ensure_size
from services.qyd.structure import QYDStructure
from .double import DoubleSpec


def minimal_relations(q: QYDStructure, N: int) -> Tuple[List[Subspace], List[Subspace]]:
    """Per-degree relations of the minimal double: ker [n]!~ and ker [n]!~_r."""
    return left_relations(q, N), right_relations(q, N)


def minimal_double(q: QYDStructure, N: int) -> DoubleSpec:
    left, right = minimal_relations(q, N)
    return DoubleSpec(qyd=q, truncation=N, left_relations=left, right_relations=right, name=f"minimal double of {q.name}")


def grow(vector: Dict[int, object], n: int, dim: int) -> List[Dict[int, object]]:
    """u (x) e_k and e_k (x) u for u in degree n - 1."""
    shift = dim ** (n - 1)
    out = []
    for letter in range(dim):
        out.append({i * dim + letter: x for i, x in vector.items()})
        out.append({letter * shift + i: x for i, x in vector.items()})
    return out


def ideal_closure(generators: Mapping[int, Subspace], dim: int, field: FieldSpec, N: int) -> List[Subspace]:
    """Degree components J_n = J_{n-1} (x) V + V (x) J_{n-1} + G_n of the
    two-sided ideal generated by the homogeneous spaces G_n, n = 0..N."""
    spaces = [generators.get(0) or Subspace.zero(1, field)]
    for n in range(1, N + 1):
        ensure_size(dim ** n, f"degree-{n} ideal")
        vectors = []
        for u in spaces[-1].basis:
            vectors.extend(grow(u, n, dim))
        extra = generators.get(n)
        if extra is not None:
            vectors.extend(extra.basis)
        spaces.append(Subspace.span(vectors, dim ** n, field))
        logger.debug(f"ideal closure degree {n}: dimension {spaces[-1].dim}")
    return spaces


def quadratic_dims_from(degree_two: Subspace, dim: int, N: int) -> List[int]:
    """dim T(V)_n / <R_2>_n for n = 0..N."""
    ideal = ideal_closure({2: degree_two}, dim, degree_two.field, N)
    return [space.codim for space in ideal]


def quadratic_double_dims(q: QYDStructure, N: int) -> List[int]:
    """Graded dimensions of T(V) modulo the ideal generated by ker [2]!~."""
    degree_two = left_relations(q, 2)[2]
    dims = quadratic_dims_from(degree_two, q.dim, N)
    logger.info(f"Quadratic double of {q.name or 'structure'}: {dims}")
    return dims


def _integer_map(q: QYDStructure, n: int, side: str) -> Matrix:
    if side == "left":
        return quasibraided_integer(q, n).matrix
    return right_quasibraided_integer(q, n).matrix


def _lower_quotient(q: QYDStructure, space: Subspace, side: str) -> Matrix:
    extra = Matrix.identity(q.group.order * q.dim, q.field)
    if side == "left":
        return space.quotient_map().kron(extra)
    return extra.kron(space.quotient_map())


def triangular_ideal_check(q: QYDStructure, relations: List[Subspace], side: str = "left", N: Optional[int] = None) -> CheckReport:
    """[n]~ R_n lies in R_{n-1} (x) kG (x) V for n = 1..N (right-handed:
    [n]~_r R_n in V* (x) kG (x) R_{n-1}); the criterion for the ideal spanned by
    the R_n to be triangular."""
    top = len(relations) - 1 if N is None else N
    for n in range(1, top + 1):
        if relations[n].dim == 0:
            continue
        op = _lower_quotient(q, relations[n - 1], side) @ _integer_map(q, n, side)
        for k, vector in enumerate(relations[n].basis):
            if op.apply(vector):
                return CheckReport.fail("triangular_ideal", {"side": side, "degree": n, "basis_vector": k})
    return CheckReport.ok("triangular_ideal", side=side, degrees=top)


def symmetric_ideal(dim: int, field: FieldSpec, N: int) -> List[Subspace]:
    """Components of <Lambda^2> in T(V): the relations of S(V)."""
    one = field.one
    vectors = []
    for a in range(dim):
        for b in range(a + 1, dim):
            vectors.append({a * dim + b: one, b * dim + a: -one})
    degree_two = Subspace.span(vectors, dim * dim, field) if N >= 2 else None
    generators = {2: degree_two} if degree_two is not None else {}
    return ideal_closure(generators, dim, field, N)
