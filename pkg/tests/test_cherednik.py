import pytest

from core.exceptions import MissingClassParameterError
from services.cherednik.algebra import (
    CherednikParams,
    cherednik_algebra,
    class_parameters,
    commutativity_classification_check,
    commutator_relation_check,
    delta_tc,
    delta_tc_shape,
    dunkl_check,
    dunkl_commutator,
)
from services.cherednik.embedding import (
    build_reflection_yd,
    embed_Mc_check,
    embed_Pi_check,
    proportionality_scalar,
    reflection_subquotient,
)
from services.cherednik.fomin_kirillov import fomin_kirillov_dims
from services.cherednik.reflections import cocycle, covariance_check, find_reflections
from services.cherednik.restricted import coinvariant_relations, restricted_dims
from services.doubles.double import DoubleEngine, associativity_witnesses
from services.doubles.minimality import minimality_check
from services.doubles.pbw import pbw_slices
from services.doubles.relations import symmetric_ideal, triangular_ideal_check
from services.linalg.matrix import Matrix
from services.modules.gmodule import GModule, reflection_module, trivial_module
from services.qyd.perfect import perfect_subquotient_check, right_perfect_subquotient_check
from services.qyd.structure import QYDStructure, induce_subquotient, qyd_check


def test_reflections_of_S3(refl_S3, S3):
    reflections = find_reflections(refl_S3)
    assert sorted(S3.label(r.element) for r in reflections) == ["(1 2)", "(1 3)", "(2 3)"]
    assert len({r.class_index for r in reflections}) == 1
    assert covariance_check(refl_S3, reflections).passed


def test_cocycle_of_a_reflection_on_itself(refl_S3, QQ):
    reflections = find_reflections(refl_S3)
    s = reflections[0].element
    assert cocycle(refl_S3, reflections, s, s) == QQ.element(-1)
    assert build_reflection_yd(refl_S3, reflections).cocycle.passed


def test_cyclic_group_on_a_line_over_GF5(C4, GF5):
    module = GModule.from_generator_images(C4, [Matrix.scalar(1, GF5.element(2), GF5)], GF5)
    assert len(find_reflections(module)) == 3


def test_delta_tc_is_quasi_yd(refl_S3, QQ):
    q = delta_tc(refl_S3, CherednikParams.uniform(1, 1))
    assert qyd_check(q).passed
    shape = delta_tc_shape(refl_S3, q)
    assert QQ.to_json(shape["t"]) == 1
    assert {QQ.to_json(c) for c in shape["c"].values()} == {1}


def test_class_parameters_and_missing_values(refl_S3, S3):
    by_class = class_parameters(refl_S3, {"(1 2)": 2})
    assert by_class == {S3.class_index(S3.element("(1 2)")): 2}
    with pytest.raises(MissingClassParameterError):
        delta_tc(refl_S3, CherednikParams(t=1))


@pytest.mark.parametrize("field_name", ["QQ", "GF5", "GF3"])
def test_rational_cherednik_algebra_has_pbw_basis(field_name, request, S3):
    fld = request.getfixturevalue(field_name)
    spec = cherednik_algebra(reflection_module(S3, fld), CherednikParams.uniform(1, 1), 4)
    engine = DoubleEngine(spec)
    assert pbw_slices(spec, engine=engine).passed
    assert associativity_witnesses(spec, seed=1, samples=100, engine=engine).passed
    assert commutator_relation_check(spec, engine=engine).passed


def test_cherednik_algebra_is_minimal_over_QQ(H11_S3):
    assert minimality_check(H11_S3(4)).passed


def test_weyl_algebra_in_characteristic_3_is_not_minimal(S3, GF3):
    spec = cherednik_algebra(reflection_module(S3, GF3), CherednikParams.uniform(1, 0), 3)
    report = minimality_check(spec)
    assert not report.passed
    assert report.witness["degree"] == 3


def test_symmetric_relations_must_be_triangular(pathological):
    report = triangular_ideal_check(pathological, symmetric_ideal(2, pathological.field, 2), "left")
    assert not report.passed


def test_dunkl_operator_on_the_trivial_group(trivial, QQ):
    module = trivial_module(trivial, QQ)
    spec = cherednik_algebra(module, CherednikParams.uniform(1, 0), 3)
    result = dunkl_commutator(spec, {(2,): 1}, 0)
    assert result.agree
    assert result.straightened == {(trivial.identity, (1,)): QQ.element(2)}


def test_dunkl_formula_on_S3(H11_S3):
    spec = H11_S3(4)
    engine = DoubleEngine(spec)
    for v in range(spec.dim):
        assert dunkl_commutator(spec, {(1, 1): 1}, v, engine=engine).agree
    report = dunkl_check(spec, degree=3, engine=engine)
    assert report.passed
    assert report.details["degree"] == 3


def test_cherednik_commutators_for_C4_on_a_line(C4, GF5):
    module = GModule.from_generator_images(C4, [Matrix.scalar(1, GF5.element(2), GF5)], GF5)
    spec = cherednik_algebra(module, CherednikParams.uniform(1, 1), 4)
    engine = DoubleEngine(spec)
    assert commutator_relation_check(spec, engine=engine).passed
    report = dunkl_check(spec, degree=3, engine=engine)
    assert report.passed
    assert report.details == {"monomials_checked": 4, "degree": 3}


def test_commutativity_classification(refl_S3):
    q = delta_tc(refl_S3, CherednikParams.uniform(1, 1))
    report = commutativity_classification_check(refl_S3, q)
    assert report.passed
    assert report.details["delta_tc_shape"]


def test_commutativity_classification_needs_an_assumption_in_positive_characteristic(S3, GF5):
    module = reflection_module(S3, GF5)
    q = delta_tc(module, CherednikParams.uniform(1, 1))
    assert not commutativity_classification_check(module, q).passed
    assert commutativity_classification_check(module, q, assume_irreducible=True).passed


def test_coinvariants_of_S3(refl_S3):
    assert [s.codim for s in coinvariant_relations(refl_S3, 4)] == [1, 2, 2, 1, 0]


def test_restricted_algebra_of_S3(refl_S3):
    result = restricted_dims(refl_S3, CherednikParams.uniform(0, 1), 4, minimality_degree=3)
    assert result.stabilized
    assert result.total == 6
    assert result.restricted_dim == 216
    assert result.minimality.passed
    assert result.to_json()["total_equals_group_order"]


def test_restricted_algebra_needs_enough_degrees(refl_S3):
    result = restricted_dims(refl_S3, CherednikParams.uniform(0, 1), 2, minimality_degree=1)
    assert not result.stabilized
    assert result.total is None


def test_proportionality_scalar(refl_S3, QQ):
    values = CherednikParams.uniform(1, 1).values(refl_S3, find_reflections(refl_S3))
    assert proportionality_scalar(refl_S3, values) == QQ.element(3)


@pytest.mark.parametrize("t", [0, 1])
def test_embedding_into_the_reflection_double(refl_S3, t):
    report = embed_Mc_check(refl_S3, CherednikParams.uniform(t, 1), 3)
    assert report.passed
    if t:
        assert report.details["kappa"] == 3
        assert report.details["t_prime"] == "1/3"
    else:
        assert report.details["t_prime"] == 0


def test_reflection_yd_modules_of_S3(refl_S3, S3):
    data = build_reflection_yd(refl_S3)
    assert data.y_g.check().passed
    assert data.y_pi.check().passed
    assert data.y_pi.dim == refl_S3.dim + 3
    assert data.y_pi.grading[S3.identity].rank() == refl_S3.dim


@pytest.mark.parametrize("t, c", [(1, 1), (0, 1), (2, 3)])
def test_delta_tc_is_a_perfect_subquotient_of_Y_Pi(refl_S3, t, c):
    params = CherednikParams.uniform(t, c)
    data, pair = reflection_subquotient(refl_S3, params)
    w = QYDStructure.from_yd(data.y_pi)
    source = delta_tc(refl_S3, params)
    assert induce_subquotient(w, pair).L == source.L
    assert perfect_subquotient_check(source, w, pair, 3).passed
    assert right_perfect_subquotient_check(source, w, pair, 3).passed


def test_Y_Pi_subquotient_report(refl_S3):
    report = embed_Pi_check(refl_S3, CherednikParams.uniform(1, 1), 4)
    assert report.passed
    assert report.details == {"degrees": 3, "target_dim": 5}


def test_embedding_with_vanishing_c_is_degenerate(refl_S3):
    report = embed_Mc_check(refl_S3, CherednikParams.uniform(1, 0), 3)
    assert not report.passed
    assert report.details["degenerate"]


def test_fomin_kirillov_for_S3(QQ):
    result = fomin_kirillov_dims(3, 4, QQ)
    assert result.degree_two == 5
    assert result.relations_match
    assert result.fomin_kirillov == [1, 3, 4, 3, 1]
    assert result.agree


def test_fomin_kirillov_for_S4(QQ):
    result = fomin_kirillov_dims(4, 2, QQ)
    assert result.degree_two == 17
    assert result.relations_match
    assert result.nichols == [1, 6, 19]
    assert result.agree


def test_zero_structure_has_no_cherednik_shape(refl_S3):
    assert delta_tc_shape(refl_S3, QYDStructure.zero(refl_S3)) == {
        "t": refl_S3.field.zero,
        "c": {r.element: refl_S3.field.zero for r in find_reflections(refl_S3)},
    }
