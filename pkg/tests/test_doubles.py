import pytest

from core.exceptions import ShapeMismatchError, TruncationExceededError
from services.doubles.double import (
    DoubleEngine,
    DoubleSpec,
    GeneratorKind,
    NormalFormElement,
    accumulate,
    associativity_witnesses,
    straighten,
)
from services.doubles.minimality import minimality_check
from services.doubles.pairing import harish_chandra_formula, harish_chandra_gram, scalar_pairing, yd_pairing_check
from services.doubles.pbw import pbw_slices
from services.doubles.relations import (
    ideal_closure,
    minimal_double,
    quadratic_double_dims,
    symmetric_ideal,
    triangular_ideal_check,
)
from services.doubles.standard_module import standard_module_matrices
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.modules.gmodule import trivial_module
from services.qyd.structure import QYDStructure, qyd_check

V, G, F = GeneratorKind.V, GeneratorKind.G, GeneratorKind.F


@pytest.fixture
def minimal_Y_S3(Y_S3):
    return minimal_double(QYDStructure.from_yd(Y_S3), 3)


def test_accumulate_drops_cancelled_keys(QQ):
    target = {}
    accumulate(target, "x", QQ.one)
    accumulate(target, "x", -QQ.one)
    assert target == {}


def test_normal_form_arithmetic(QQ):
    a = NormalFormElement.monomial(QQ, left=(0,), g=0)
    b = NormalFormElement.monomial(QQ, right=(1,), g=0)
    assert (a - a).is_zero()
    assert (a + b).group_part() == {}
    assert NormalFormElement.monomial(QQ, g=1).group_part() == {1: QQ.one}


def test_free_double_commutation_rules(pathological, QQ):
    spec = DoubleSpec.free(pathological, 2)
    s = pathological.group.generator_ids[0]
    e = pathological.group.identity
    one = NormalFormElement.monomial(QQ, g=e)

    # f1 v1 = v1 f1 + e
    assert straighten(spec, [(F, 0), (V, 0)]) == NormalFormElement.monomial(QQ, left=(0,), right=(0,)) + one
    # f1 v2 = v2 f1 + s
    expected = NormalFormElement.monomial(QQ, left=(1,), right=(0,)) + NormalFormElement.monomial(QQ, g=s)
    assert straighten(spec, [(F, 0), (V, 1)]) == expected
    # s v1 = -v1 s
    assert straighten(spec, [(G, s), (V, 0)]) == NormalFormElement.monomial(QQ, left=(0,), g=s, coefficient=QQ.element(-1))
    # f1 s = s (f1 < s) = -s f1
    assert straighten(spec, [(F, 0), (G, s)]) == NormalFormElement.monomial(QQ, g=s, right=(0,), coefficient=QQ.element(-1))


def test_free_double_is_associative(pathological):
    spec = DoubleSpec.free(pathological, 2)
    report = associativity_witnesses(spec, seed=3, samples=100)
    assert report.passed
    assert spec.ideal_growth_check().passed


def test_free_double_of_zero_structure_is_not_minimal(refl_S3):
    spec = DoubleSpec.free(QYDStructure.zero(refl_S3), 2)
    report = minimality_check(spec)
    assert not report.passed
    assert report.witness["degree"] == 1


def test_truncation_is_enforced(pathological):
    spec = DoubleSpec.free(pathological, 1)
    with pytest.raises(TruncationExceededError):
        spec.require_degree(2)


def test_relation_lists_must_cover_every_degree(pathological, QQ):
    with pytest.raises(ShapeMismatchError):
        DoubleSpec(qyd=pathological, truncation=2, left_relations=[Subspace.zero(1, QQ)], right_relations=[Subspace.zero(1, QQ)])


def test_minimal_double_of_a_yd_module(minimal_Y_S3):
    spec = minimal_Y_S3
    assert spec.quotient_dims("left") == [1, 3, 4, 3]
    assert spec.quotient_dims("right") == [1, 3, 4, 3]
    engine = DoubleEngine(spec)
    assert minimality_check(spec, engine=engine).passed
    assert pbw_slices(spec, engine=engine).passed
    assert spec.ideal_growth_check().passed


def test_minimal_relations_are_triangular(minimal_Y_S3, pathological):
    q = minimal_Y_S3.qyd
    assert triangular_ideal_check(q, minimal_Y_S3.left_relations, "left").passed
    assert triangular_ideal_check(q, minimal_Y_S3.right_relations, "right").passed
    spec = minimal_double(pathological, 3)
    assert triangular_ideal_check(pathological, spec.right_relations, "right").passed
    assert spec.quotient_dims("right") == [1, 1, 1, 1]


def test_symmetric_ideal_is_not_triangular_for_a_yd_module(Y_S3):
    q = QYDStructure.from_yd(Y_S3)
    assert not triangular_ideal_check(q, symmetric_ideal(3, q.field, 2), "left").passed


def test_quadratic_cover_of_Y_S3(Y_S3):
    assert quadratic_double_dims(QYDStructure.from_yd(Y_S3), 4) == [1, 3, 4, 3, 1]


def test_ideal_closure(QQ):
    assert [s.codim for s in symmetric_ideal(2, QQ, 3)] == [1, 2, 3, 4]
    everything = Subspace.full(4, QQ)
    assert [s.codim for s in ideal_closure({2: everything}, 2, QQ, 3)] == [1, 2, 0, 0]


def test_harish_chandra_gram_matches_formula(minimal_Y_S3):
    spec = minimal_Y_S3
    engine = DoubleEngine(spec)
    for n in (1, 2, 3):
        gram = harish_chandra_gram(spec, n, engine=engine)
        formula = harish_chandra_formula(spec.qyd, n, gram.left_basis, gram.right_basis)
        assert {g: m for g, m in gram.blocks.items() if not m.is_zero()} == {g: m for g, m in formula.items() if not m.is_zero()}
        assert gram.scalar == scalar_pairing(spec.qyd, n, gram.left_basis, gram.right_basis)
        assert gram.nondegenerate


def test_degree_one_gram_is_beta(pathological, QQ):
    spec = DoubleSpec.free(pathological, 1)
    gram = harish_chandra_gram(spec, 1)
    s = pathological.group.generator_ids[0]
    assert gram.blocks[pathological.group.identity] == Matrix.from_rows([[1, 0], [0, 0]], QQ)
    assert gram.blocks[s] == Matrix.from_rows([[0, 1], [0, 0]], QQ)


def test_yd_pairing_condition(pathological, refl_S3, QQ):
    assert yd_pairing_check(pathological).passed
    broken = QYDStructure(module=refl_S3, L={0: Matrix.from_rows([[1, 0], [0, 0]], QQ)})
    assert not yd_pairing_check(broken).passed
    assert not qyd_check(broken).passed


def test_standard_module_of_the_trivial_representation(minimal_Y_S3):
    spec = minimal_Y_S3
    module = standard_module_matrices(spec, trivial_module(spec.group, spec.field), N=2)
    assert len(module.basis) == 1 + 3 + 4
    assert module.degrees[:4] == [0, 1, 1, 1]
    assert module.report.passed
    # V* kills the lowest vector
    assert all(not m.column(0) for m in module.f)
