import pytest

from core.exceptions import InvalidStructureError
from services.braided.operators import trivial_braiding
from services.cherednik.algebra import CherednikParams, delta_tc
from services.cherednik.embedding import reflection_subquotient
from services.linalg.matrix import Matrix
from services.modules.gmodule import GModule
from services.modules.yd_module import YDModule
from services.qyd.perfect import (
    perfect_subquotient_check,
    right_subquotient,
    yd_intertwiner_check,
    yv_factorial_identity,
)
from services.qyd.semibraiding import compatibility_report, semibraiding_from_compatible
from services.qyd.structure import (
    QYDStructure,
    build_YV,
    classify_1dim_check,
    induce_subquotient,
    mix_structures,
    qyd_check,
)

TRANSPOSITIONS = ["(1 2)", "(1 3)", "(2 3)"]


def test_pathological_structure_is_quasi_yd(pathological):
    assert qyd_check(pathological).passed
    assert yd_intertwiner_check(pathological).passed
    assert not pathological.is_coaction()
    with pytest.raises(InvalidStructureError):
        pathological.as_yd_module()


def test_yd_module_coaction(Y_S3):
    q = QYDStructure.from_yd(Y_S3)
    assert q.is_coaction()
    assert q.as_yd_module().dim == 3


def test_Y_of_V(pathological):
    y, pair = build_YV(pathological)
    assert y.dim == 4
    assert y.check().passed
    assert pair.nu @ pair.mu == pathological.sum_L()


def test_V_is_a_perfect_subquotient_of_Y_of_V(pathological):
    y, pair = build_YV(pathological)
    w = QYDStructure.from_yd(y)
    assert perfect_subquotient_check(pathological, w, pair, 3).passed
    assert induce_subquotient(w, pair).L == pathological.L


def test_factorial_factors_through_Y_of_V(pathological, refl_S3):
    assert yv_factorial_identity(pathological, 3).passed
    assert yv_factorial_identity(QYDStructure.zero(refl_S3), 2).passed


def test_right_subquotient_transposes(pathological):
    _, pair = build_YV(pathological)
    dual = right_subquotient(pair)
    assert dual.mu == pair.nu.transpose()
    assert dual.nu == pair.mu.transpose()


def test_mixtures(pathological):
    assert mix_structures([(2, pathological), (-2, pathological)]).L == {}
    doubled = mix_structures([(1, pathological), (1, pathological)])
    assert doubled.L == {h: m.scale(pathological.field.element(2)) for h, m in pathological.L.items()}
    with pytest.raises(InvalidStructureError):
        mix_structures([])


def test_one_dimensional_structures(S3, QQ):
    report = classify_1dim_check(S3, [1] * 6, {S3.identity: 1}, QQ)
    assert report.passed
    assert report.details["yetter_drinfeld"]

    class_sum = {S3.element(label): 1 for label in TRANSPOSITIONS}
    report = classify_1dim_check(S3, [1] * 6, class_sum, QQ)
    assert report.passed
    assert not report.details["yetter_drinfeld"]
    assert sorted(report.details["support"]) == TRANSPOSITIONS


def test_one_dimensional_structures_need_central_p_and_a_character(S3, QQ):
    assert not classify_1dim_check(S3, [1] * 6, {S3.element("(1 2)"): 1}, QQ).passed
    assert not classify_1dim_check(S3, [2] * 6, {}, QQ).passed


def test_semibraiding_of_a_single_braiding(Y_S3):
    psi = Y_S3.braiding()
    semi = semibraiding_from_compatible([psi], [(1, 1)])
    assert semi.map(1, 1) == psi
    assert semi.map(1, 2).shape == (27, 27)


def test_flip_and_minus_flip_are_compatible(QQ):
    tau = trivial_braiding(2, QQ)
    assert compatibility_report([tau, -tau]).passed


def test_inducing_through_a_composed_pair(refl_S3):
    params = CherednikParams.uniform(1, 1)
    data, pair = reflection_subquotient(refl_S3, params)
    yy, outer = build_YV(QYDStructure.from_yd(data.y_pi))
    composed = pair.compose(outer)
    assert composed.mu.shape == (yy.dim, refl_S3.dim)
    induced = induce_subquotient(QYDStructure.from_yd(yy), composed)
    assert induced.L == delta_tc(refl_S3, params).L


def test_mixing_commutes_with_inducing(pathological):
    y, pair = build_YV(pathological)
    coaction = QYDStructure.from_yd(y)
    unit = QYDStructure(module=y.base, L={y.base.group.identity: Matrix.identity(y.dim, y.field)})
    mixed = induce_subquotient(mix_structures([(3, coaction), (-2, unit)]), pair)
    separate = mix_structures([(3, induce_subquotient(coaction, pair)), (-2, induce_subquotient(unit, pair))])
    assert mixed.L == separate.L
    assert induce_subquotient(unit, pair).L == {y.base.group.identity: pathological.sum_L()}


def test_two_coactions_give_compatible_braidings(C2, QQ, Y_S3):
    s = C2.generator_ids[0]
    base = GModule.from_generator_images(C2, [Matrix.from_rows([[1, 0], [0, -1]], QQ)], QQ, name="k^2")
    first = YDModule.from_degrees(base, [C2.identity, s])
    second = YDModule.from_degrees(base, [s, C2.identity])
    assert compatibility_report([first.braiding(), second.braiding()]).passed

    flat = YDModule.trivially_graded(Y_S3.base)
    assert flat.braiding() == trivial_braiding(Y_S3.dim, QQ)
    assert compatibility_report([Y_S3.braiding(), flat.braiding()]).passed


def test_semibraiding_sums_the_braidings(Y_S3, QQ):
    psi = Y_S3.braiding()
    tau = trivial_braiding(Y_S3.dim, QQ)
    semi = semibraiding_from_compatible([psi, tau], [(1, 1)])
    assert semi.map(1, 1) == psi + tau
    assert semi.one_past(1) == psi + tau
