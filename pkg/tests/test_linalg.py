from itertools import product

import pytest

from core.config import settings
from core.exceptions import ConfigurationError, FieldMismatchError, MatrixSizeExceededError, ShapeMismatchError
from services.linalg.field import FieldSpec
from services.linalg.matrix import Matrix, change_field
from services.linalg.subspace import Subspace
from services.linalg.tensor import (
    ensure_size,
    flat_index,
    flip,
    index_word,
    leg_permutation,
    tensor_power,
    word_index,
    word_of,
)


def test_field_labels_and_elements(QQ, GF5):
    assert QQ.label == "QQ"
    assert GF5.label == "GF(5)"
    assert QQ.to_json(QQ.element("3/4")) == "3/4"
    assert GF5.to_json(GF5.element(-1)) == 4
    assert GF5.to_json(GF5.element("1/2")) == 3


def test_field_rejects_composite_characteristic():
    with pytest.raises(ConfigurationError):
        FieldSpec(6)


def test_reduction_of_non_invertible_denominator(GF3):
    with pytest.raises(FieldMismatchError):
        GF3.element("1/3")


def test_matrix_arithmetic(QQ):
    a = Matrix.from_rows([[1, 2], [3, 4]], QQ)
    b = Matrix.identity(2, QQ)
    assert a @ b == a
    assert (a - a).is_zero()
    assert (a + b).to_rows() == [[2, 2], [3, 5]]
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]
    assert a.scale(QQ.element(2)).to_rows() == [[2, 4], [6, 8]]
    assert a.rank() == 2


def test_matrix_shape_mismatch(QQ):
    with pytest.raises(ShapeMismatchError):
        Matrix.identity(2, QQ) @ Matrix.identity(3, QQ)


def test_kron_follows_lexicographic_order(QQ):
    a = Matrix.from_rows([[0, 1], [1, 0]], QQ)
    b = Matrix.from_rows([[1, 0], [0, 2]], QQ)
    k = a.kron(b)
    # (a (x) b)(e_0 (x) e_1) = e_1 (x) 2 e_1
    assert k.column(1) == {3: QQ.element(2)}
    assert k.shape == (4, 4)


@pytest.mark.parametrize(
    "p, rows",
    [
        (3, [[1, 2, 0], [2, 1, 0]]),
        (5, [[1, 2, 3], [2, 4, 1]]),
        (5, [[0, 0, 0]]),
        (2, [[1, 1, 1]]),
    ],
)
def test_kernel_agrees_with_enumeration_over_GFp(p, rows):
    fld = FieldSpec.prime(p)
    m = Matrix.from_rows(rows, fld)
    kernel = Subspace.kernel_of(m)
    count = 0
    for values in product(range(p), repeat=m.cols):
        vector = {i: fld.element(x) for i, x in enumerate(values) if x}
        vanishes = m.apply(vector) == {}
        assert kernel.contains(vector) == vanishes
        count += vanishes
    assert count == p ** len(m.kernel_basis())


def test_kron_is_associative(QQ, GF5):
    for fld in (QQ, GF5):
        a = Matrix.from_rows([[1, 2], [0, 3]], fld)
        b = Matrix.from_rows([[0, 1, 4]], fld)
        c = Matrix.from_rows([[2], [5]], fld)
        assert a.kron(b).kron(c) == a.kron(b.kron(c))
        assert a.kron(b).kron(c).shape == (4, 6)


def test_kernel_basis_and_rank(QQ):
    m = Matrix.from_rows([[1, 1, 0], [0, 0, 1]], QQ)
    kernel = m.kernel_basis()
    assert len(kernel) == 1
    assert m.apply(kernel[0]) == {}
    assert m.rank() + len(kernel) == m.cols


def test_rank_depends_on_characteristic(QQ, GF3):
    rows = [[1, 1], [1, -2]]
    assert Matrix.from_rows(rows, QQ).rank() == 2
    assert Matrix.from_rows(rows, GF3).rank() == 1
    assert change_field(Matrix.from_rows(rows, QQ), GF3).rank() == 1


def test_subspace_quotient_and_section(QQ):
    w = Subspace.span([{0: QQ.one, 1: QQ.one}], 3, QQ)
    assert w.dim == 1
    assert w.codim == 2
    q = w.quotient_map()
    assert q.shape == (2, 3)
    assert (q @ w.basis_matrix()).is_zero()
    assert q @ w.section() == Matrix.identity(2, QQ)


def test_subspace_equality_is_canonical(QQ):
    a = Subspace.span([{0: QQ.one, 1: QQ.one}, {1: QQ.one}], 2, QQ)
    assert a == Subspace.full(2, QQ)
    assert Subspace.span([], 2, QQ) == Subspace.zero(2, QQ)


def test_subspace_intersection_and_preimage(QQ):
    x = Subspace.span([{0: QQ.one}, {1: QQ.one}], 3, QQ)
    y = Subspace.span([{1: QQ.one}, {2: QQ.one}], 3, QQ)
    assert x.intersection(y) == Subspace.span([{1: QQ.one}], 3, QQ)
    projection = Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 0]], QQ)
    assert Subspace.zero(3, QQ).preimage(projection) == y
    assert (x + y) == Subspace.full(3, QQ)


def test_image_and_kernel_dimensions(QQ):
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]], QQ)
    assert Subspace.image_of(m).dim == 1
    assert Subspace.kernel_of(m).dim == 2


def test_word_indexing():
    assert word_index((1, 0, 2), 3) == 11
    assert index_word(11, 3, 3) == (1, 0, 2)
    radices = [2, 3, 2, 3]
    assert flat_index((1, 2, 0, 1), radices) == 1 * 18 + 2 * 6 + 0 * 3 + 1
    assert word_of(flat_index((1, 2, 0, 1), radices), radices) == (1, 2, 0, 1)


def test_flip_and_leg_permutation_agree(QQ):
    assert flip(3, 3, QQ) == leg_permutation([1, 0], 3, QQ)
    cyclic = leg_permutation([1, 2, 0], 2, QQ)
    # letters (a, b, c) go to positions (1, 2, 0): the word becomes (c, a, b)
    assert cyclic.column(word_index((1, 0, 0), 2)) == {word_index((0, 1, 0), 2): QQ.one}
    assert tensor_power(cyclic, 0) == Matrix.identity(1, QQ)


def test_size_cap(QQ):
    settings.MAX_MATRIX_DIM = 10
    with pytest.raises(MatrixSizeExceededError):
        ensure_size(11, "test operator")
    ensure_size(10, "test operator")
