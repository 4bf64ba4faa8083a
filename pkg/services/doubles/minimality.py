from typing import Dict, List, Optional, Tuple

from loguru import logger

from models.reports import CheckReport
from services.linalg.matrix import Matrix
from services.linalg.tensor import Word
from .double import DoubleEngine, DoubleSpec, NormalFormElement, TermKey


def _commutator_matrix(
    engine: DoubleEngine, elements: List[NormalFormElement], partners: List[NormalFormElement]
) -> Matrix:
    """Columns: the stacked commutators [partner_a, element_j] over all a."""
    rows: Dict[Tuple[int, TermKey], int] = {}
    entries = {}
    for j, element in enumerate(elements):
        for a, partner in enumerate(partners):
            for key, x in engine.commutator(partner, element).terms.items():
                row = rows.setdefault((a, key), len(rows))
                entries[(row, j)] = x
    return Matrix.from_entries(entries, (len(rows), len(elements)), engine.field)


def _describe(basis: List[Word], vector: Dict[int, object], side: str, engine: DoubleEngine) -> str:
    terms = {}
    for j, x in vector.items():
        key = (basis[j], engine.identity, ()) if side == "left" else ((), engine.identity, basis[j])
        terms[key] = x
    return NormalFormElement(engine.field, terms).to_text(engine.group)


def minimality_check(spec: DoubleSpec, N: Optional[int] = None, engine: Optional[DoubleEngine] = None) -> CheckReport:
    """Search degrees 1..N for b in U-_n with [f, b] = 0 for all f in V*, and
    for phi in U+_n with [phi, v] = 0 for all v in V."""
    engine = engine or DoubleEngine(spec)
    top = spec.truncation if N is None else min(N, spec.truncation)
    f_gens = [engine.generator(("f", a)) for a in range(spec.dim)]
    v_gens = [engine.generator(("v", a)) for a in range(spec.dim)]
    violations = []
    for n in range(1, top + 1):
        for side, partners in (("left", f_gens), ("right", v_gens)):
            basis = spec.basis_words(side, n)
            if not basis:
                continue
            if side == "left":
                elements = [NormalFormElement.monomial(spec.field, left=b, g=engine.identity) for b in basis]
            else:
                elements = [NormalFormElement.monomial(spec.field, g=engine.identity, right=b) for b in basis]
            kernel = _commutator_matrix(engine, elements, partners).kernel_basis()
            if kernel:
                logger.info(f"Minimality violation on the {side} side in degree {n}: {len(kernel)} independent elements")
                violations.append({
                    "side": side,
                    "degree": n,
                    "dimension": len(kernel),
                    "element": _describe(basis, kernel[0], side, engine),
                })
    if violations:
        return CheckReport.fail("minimality", violations[0], violations=violations, truncation=top)
    return CheckReport.ok("minimality", truncation=top)
