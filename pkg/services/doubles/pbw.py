from typing import Dict, List, Optional, Tuple

from loguru import logger

from models.reports import CheckReport
from services.linalg.field import Scalar
from services.linalg.matrix import Matrix
from services.linalg.tensor import Word, index_word, words
from .double import DoubleEngine, DoubleSpec, NormalFormElement, TermKey, accumulate


def _collapse_vectors(spec: DoubleSpec, engine: DoubleEngine, N: int) -> List[NormalFormElement]:
    """Normal forms of phi . r for relations r of I- and of rho . x for
    relations rho of I+, with phi, x running over words of complementary degree.
    In a double with the PBW property every one of them vanishes."""
    d = spec.dim
    out: List[NormalFormElement] = []
    for side in ("left", "right"):
        for n in range(1, N + 1):
            for relation in spec.relations(side)[n].basis:
                terms = [(index_word(i, n, d), x) for i, x in relation.items()]
                for m in range(1, N - n + 1):
                    for other in words(m, d):
                        raw: Dict[TermKey, Scalar] = {}
                        for word, x in terms:
                            if side == "left":
                                product = engine.right_word_past_left_word(tuple(other), word)
                            else:
                                product = engine.right_word_past_left_word(word, tuple(other))
                            for key, c in product.items():
                                accumulate(raw, key, x * c)
                        reduced = engine.reduce_terms(raw)
                        if not reduced.is_zero():
                            out.append(reduced)
    return out


def pbw_slices(spec: DoubleSpec, N: Optional[int] = None, engine: Optional[DoubleEngine] = None) -> CheckReport:
    """Expected and observed dimensions of the (a, b) slices U-_a . kG . U+_b, a + b <= N.

    Expected is dim U-_a * |G| * dim U+_b; observed subtracts the rank of the
    collapse vectors projected to the slice.
    """
    engine = engine or DoubleEngine(spec)
    top = spec.truncation if N is None else min(N, spec.truncation)
    left_dims = spec.quotient_dims("left")
    right_dims = spec.quotient_dims("right")
    order = spec.group.order
    collapse = _collapse_vectors(spec, engine, top)

    projected: Dict[Tuple[int, int], List[Dict[TermKey, Scalar]]] = {}
    for element in collapse:
        parts: Dict[Tuple[int, int], Dict[TermKey, Scalar]] = {}
        for key, x in element.terms.items():
            parts.setdefault((len(key[0]), len(key[2])), {})[key] = x
        for slice_key, part in parts.items():
            projected.setdefault(slice_key, []).append(part)

    slices = []
    for a in range(top + 1):
        for b in range(top + 1 - a):
            expected = left_dims[a] * order * right_dims[b]
            vectors = projected.get((a, b), [])
            rank = 0
            if vectors:
                index: Dict[TermKey, int] = {}
                rows = []
                for part in vectors:
                    rows.append({index.setdefault(key, len(index)): x for key, x in part.items()})
                rank = Matrix.from_row_vectors(rows, len(index), spec.field).rank()
            slices.append({"left_degree": a, "right_degree": b, "expected": expected, "observed": expected - rank})
    if collapse:
        logger.warning(f"{len(collapse)} collapse vectors in {spec.name or 'double'}: no PBW basis up to degree {top}")
        bad = next((s for s in slices if s["observed"] != s["expected"]), slices[0])
        return CheckReport.fail(
            "pbw", {"slice": [bad["left_degree"], bad["right_degree"]], "collapse": collapse[0].to_text(spec.group)}, slices=slices
        )
    logger.info(f"PBW slices of {spec.name or 'double'} up to total degree {top} are all of the expected size")
    return CheckReport.ok("pbw", slices=slices, truncation=top)
