import pytest

from core.config import settings
from core.exceptions import (
    BraidEquationError,
    ConfigurationError,
    GenericityInstabilityError,
    OracleCapExceededError,
)
from services.braided.genericity import (
    GenericParams,
    deformed_factorial,
    mixed_relations,
    specialized_deformed_factorial,
    stable_kernels,
)
from services.braided.operators import (
    braid_equation_check,
    braided_factorial,
    braided_integer,
    compatibility_holds,
    nichols_kernels,
    reduced_word,
    require_braiding,
    trivial_braiding,
    woronowicz_oracle,
)
from services.braided.quasibraided import (
    left_relations,
    quasibraided_factorial,
    right_quasibraided_factorial,
    right_relations,
)
from services.cherednik.algebra import CherednikParams, delta_tc
from services.doubles.relations import grow
from services.linalg.field import FieldSpec
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.linalg.tensor import tensor_power
from services.qyd.structure import QYDStructure, build_YV


def codims(kernels):
    return [k.codim for k in kernels]


@pytest.mark.parametrize("field_name", ["QQ", "GF5"])
def test_flip_and_minus_flip_dimensions(field_name, request):
    fld = request.getfixturevalue(field_name)
    tau = trivial_braiding(3, fld)
    assert codims(nichols_kernels(tau, 4)) == [1, 3, 6, 10, 15]
    assert codims(nichols_kernels(-tau, 4)) == [1, 3, 3, 1, 0]


def test_q_line_over_GF7():
    fld = FieldSpec.prime(7)
    psi = Matrix.scalar(1, fld.element(2), fld)
    # 1 + 2 + 4 = 7 vanishes in GF(7)
    assert codims(nichols_kernels(psi, 3)) == [1, 1, 1, 0]


def test_braided_integer_of_the_flip(QQ):
    tau = trivial_braiding(2, QQ)
    two = braided_integer(tau, 2).matrix
    assert two == Matrix.identity(4, QQ) + tau


def test_product_form_matches_the_oracle(Y_S3):
    psi = Y_S3.braiding()
    for n in range(1, 5):
        assert braided_factorial(psi, n).matrix == woronowicz_oracle(psi, n).matrix


def test_oracle_cap(QQ):
    settings.ORACLE_CAP = 2
    with pytest.raises(OracleCapExceededError):
        woronowicz_oracle(trivial_braiding(2, QQ), 3)


def test_reduced_word_sorts():
    assert reduced_word([0, 1, 2]) == []
    assert reduced_word([1, 0]) == [1]
    assert len(reduced_word([2, 1, 0])) == 3


def test_braid_equation(Y_S3, QQ):
    report = braid_equation_check(Y_S3.braiding())
    assert report.passed
    assert report.details["invertible"]
    shear = Matrix.identity(2, QQ).kron(Matrix.from_rows([[1, 1], [0, 1]], QQ))
    assert not braid_equation_check(shear).passed
    with pytest.raises(BraidEquationError):
        require_braiding(shear)


def test_yd_braiding_is_compatible_with_the_flip(Y_S3):
    psi = Y_S3.braiding()
    tau = trivial_braiding(3, psi.field)
    assert compatibility_holds(psi, tau)
    assert compatibility_holds(tau, psi)


def test_mixed_relations_of_flip_and_minus_flip(QQ):
    tau = trivial_braiding(3, QQ)
    # symmetric and antisymmetric tensors only meet in zero
    assert codims(mixed_relations([tau, -tau], 2)) == [1, 3, 9]


def test_generic_deformation_of_the_flip(QQ):
    tau = trivial_braiding(2, QQ)
    params = GenericParams(trials=2, seed=7)
    assert codims(deformed_factorial(tau, 3, params)) == [1, 2, 3, 4]


def test_specialized_deformation_can_collapse(QQ):
    tau = trivial_braiding(2, QQ)
    assert specialized_deformed_factorial(tau, 2, [-1]).matrix.is_zero()
    assert specialized_deformed_factorial(tau, 2, [1]).kernel().codim == 3


def test_generic_params_need_two_trials():
    with pytest.raises(ConfigurationError):
        GenericParams(trials=1)


def test_unstable_trials_raise(QQ):
    a = [Subspace.zero(2, QQ)]
    b = [Subspace.full(2, QQ)]
    with pytest.raises(GenericityInstabilityError):
        stable_kernels([a, b])


def test_pathological_factorial_values(pathological, QQ):
    two = quasibraided_factorial(pathological, 2).matrix
    # rows are (h1, w1, h2, w2) with radices (2, 2, 2, 2); identity is 0, s is 1
    assert two.column(1) == {2: QQ.one, 8: QQ.one}
    assert two.column(2) == {2: QQ.element(-1), 8: QQ.one}


def test_pathological_left_and_right_relations(pathological, QQ):
    left = left_relations(pathological, 2)
    assert left[1].dim == 0
    right = right_relations(pathological, 4)
    assert right[1] == Subspace.span([{1: QQ.one}], 2, QQ)
    assert codims(right) == [1, 1, 1, 1, 1]


def test_left_relations_of_a_yd_module_match_nichols(Y_S3):
    q = QYDStructure.from_yd(Y_S3)
    assert codims(left_relations(q, 3)) == codims(nichols_kernels(Y_S3.braiding(), 3))


def test_flip_and_minus_flip_symmetrisers_in_degree_two(QQ):
    tau = trivial_braiding(2, QQ)
    one = QQ.one
    # id + tau kills the antisymmetric line, id - tau the symmetric tensors
    assert braided_factorial(tau, 2).kernel() == Subspace.span([{1: one, 2: -one}], 4, QQ)
    symmetric = Subspace.span([{0: one}, {3: one}, {1: one, 2: one}], 4, QQ)
    assert braided_factorial(-tau, 2).kernel() == symmetric


def test_quasibraided_factorial_of_a_coaction_is_the_braided_one(Y_S3):
    q = QYDStructure.from_yd(Y_S3)
    psi = Y_S3.braiding()
    _, pair = build_YV(q)
    for n in range(1, 4):
        quasi = quasibraided_factorial(q, n).matrix
        braided = braided_factorial(psi, n).matrix
        assert quasi == tensor_power(q.delta_matrix(), n) @ braided
        assert braided == tensor_power(pair.nu, n) @ quasi


@pytest.mark.parametrize("top", [3, 4])
def test_factorial_kernels_form_an_ideal(refl_S3, pathological, Y_S3, top):
    structures = [
        delta_tc(refl_S3, CherednikParams.uniform(1, 1)),
        delta_tc(refl_S3, CherednikParams.uniform(0, 1)),
        pathological,
        QYDStructure.from_yd(Y_S3),
    ]
    for q in structures:
        if q.dim ** top > 81:
            continue
        for kernels in (left_relations(q, top), right_relations(q, top)):
            for n in range(2, top + 1):
                for u in kernels[n - 1].basis:
                    assert all(kernels[n].contains(w) for w in grow(u, n, q.dim))


def test_right_factorial_of_delta_tc_is_injective_in_degree_one(refl_S3):
    q = delta_tc(refl_S3, CherednikParams.uniform(1, 1))
    assert right_quasibraided_factorial(q, 1).kernel().dim == 0
    assert quasibraided_factorial(q, 1).kernel().dim == 0
