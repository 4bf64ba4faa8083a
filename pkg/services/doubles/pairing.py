from dataclasses import dataclass
from typing import Dict, List, Optional

from loguru import logger

from models.reports import CheckReport
from services.braided.quasibraided import quasibraided_factorial
from services.linalg.field import Scalar
from services.linalg.matrix import Matrix
from services.linalg.tensor import Word, word_index, word_of
from services.qyd.structure import QYDStructure
from .double import DoubleEngine, DoubleSpec, accumulate


def yd_pairing_check(q: QYDStructure) -> CheckReport:
    """g . beta(f < g, v) = beta(f, g(v)) . g for every basis f, v and every g."""
    group = q.group
    for g in range(group.order):
        rho_g = q.module.rho[g]
        g_inv = group.inv(g)
        for x in range(group.order):
            # coefficient of x
            h = group.mul(g_inv, x)
            k = group.mul(x, g_inv)
            if h not in q.L and k not in q.L:
                continue
            diff = rho_g @ q.L_of(h) - q.L_of(k) @ rho_g
            if not diff.is_zero():
                (a, b), _ = next(diff.items())
                return CheckReport.fail("yd_pairing", {"g": group.label(g), "coefficient_of": group.label(x), "f": a + 1, "v": b + 1})
    return CheckReport.ok("yd_pairing", group_order=group.order)


@dataclass
class HarishChandraGram:
    """(phi_i, b_j)_H on the complement bases of degree n.

    Attributes:
        degree: n
        left_basis: words b_j spanning U-_n
        right_basis: words phi_i spanning U+_n
        blocks: group element -> matrix of its coefficients (rows phi_i, columns b_j)
        scalar: epsilon applied to the kG-valued Gram
        rank: rank of the scalar Gram
    """
    degree: int
    left_basis: List[Word]
    right_basis: List[Word]
    blocks: Dict[int, Matrix]
    scalar: Matrix
    rank: int

    @property
    def nondegenerate(self) -> bool:
        return self.rank == len(self.left_basis) == len(self.right_basis)

    def to_json(self, group) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "rank": self.rank,
            "scalar": self.scalar.to_rows(),
            "blocks": {group.label(g): m.to_rows() for g, m in sorted(self.blocks.items())},
        }


def _assemble(entries: Dict[int, Dict[tuple, Scalar]], shape, spec_field) -> Dict[int, Matrix]:
    return {g: Matrix.from_entries(cells, shape, spec_field) for g, cells in entries.items()}


def harish_chandra_gram(spec: DoubleSpec, n: int, engine: Optional[DoubleEngine] = None) -> HarishChandraGram:
    """Gram matrix of the Harish-Chandra pairing by straightening phi . b."""
    engine = engine or DoubleEngine(spec)
    left = spec.basis_words("left", n)
    right = spec.basis_words("right", n)
    entries: Dict[int, Dict[tuple, Scalar]] = {}
    scalar_entries: Dict[tuple, Scalar] = {}
    for i, phi in enumerate(right):
        for j, b in enumerate(left):
            product = engine.reduce_terms(engine.right_word_past_left_word(phi, b))
            for g, x in product.group_part().items():
                entries.setdefault(g, {})[(i, j)] = x
                accumulate(scalar_entries, (i, j), x)
    shape = (len(right), len(left))
    scalar = Matrix.from_entries(scalar_entries, shape, spec.field)
    rank = scalar.rank()
    logger.info(f"Harish-Chandra Gram in degree {n}: {shape[0]}x{shape[1]}, scalar rank {rank}")
    return HarishChandraGram(n, left, right, _assemble(entries, shape, spec.field), scalar, rank)


def harish_chandra_formula(q: QYDStructure, n: int, left: List[Word], right: List[Word]) -> Dict[int, Matrix]:
    """(phi, b)_H = (id (x) <phi, ->) m_H [n]!~ b, read off the quasibraided factorial.

    Rows of [n]!~ index (h_1, w_1, ..., h_n, w_n); m_H multiplies h_1..h_n and
    the pairing keeps the rows whose V-word equals phi.
    """
    group, dim = q.group, q.dim
    factorial = quasibraided_factorial(q, n).matrix
    columns = factorial.columns()
    radices = [group.order, dim] * n
    row_of = {tuple(phi): i for i, phi in enumerate(right)}
    entries: Dict[int, Dict[tuple, Scalar]] = {}
    for j, b in enumerate(left):
        for row, x in columns[word_index(b, dim)].items():
            digits = word_of(row, radices)
            w = tuple(digits[1::2])
            i = row_of.get(w)
            if i is None:
                continue
            h = group.identity
            for g in digits[0::2]:
                h = group.mul(h, g)
            accumulate(entries.setdefault(h, {}), (i, j), x)
    return _assemble(entries, (len(right), len(left)), q.field)


def scalar_pairing(q: QYDStructure, n: int, left: List[Word], right: List[Word]) -> Matrix:
    """epsilon((phi, b)_H) from the formula path."""
    total: Dict[tuple, Scalar] = {}
    for block in harish_chandra_formula(q, n, left, right).values():
        for key, x in block.items():
            accumulate(total, key, x)
    return Matrix.from_entries(total, (len(right), len(left)), q.field)
