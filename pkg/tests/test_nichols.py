import pytest

from core.exceptions import InvalidStructureError
from services.braided.genericity import GenericParams
from services.braided.operators import trivial_braiding
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.nichols.algebra import (
    deformed_nichols_hilbert,
    dual_kernel_dims,
    nichols_algebra,
    nichols_hilbert,
    relations_are_stable,
)
from services.nichols.bosonisation import (
    bosonisation_check,
    central_pairing,
    central_pairing_report,
    kaplansky_algebra,
    kaplansky_module,
    kaplansky_report,
)


def test_nichols_algebra_of_the_transposition_module(Y_S3):
    alg = nichols_algebra(Y_S3, 5)
    assert alg.dims == [1, 3, 4, 3, 1, 0]
    assert alg.total_dim == 12
    assert alg.vanishing_degree() == 5
    assert alg.relations[2].dim == 5
    assert relations_are_stable(Y_S3.base, alg.relations)


def test_generators_square_to_zero(Y_S3):
    alg = nichols_algebra(Y_S3, 2)
    for i in range(3):
        assert alg.product(alg.generator(i), alg.generator(i)) == {}
    assert alg.product(alg.one(), alg.generator(0)) == alg.generator(0)


def test_words_past_the_top_degree_vanish(Y_S3):
    alg = nichols_algebra(Y_S3, 5)
    assert alg.normal((0, 1, 0, 2, 1, 0)) == {}


def test_nichols_hilbert_logs_the_same_dims(Y_S3):
    assert nichols_hilbert(Y_S3, 3) == [1, 3, 4, 3]


def test_dual_braiding_has_the_same_kernels(Y_S3):
    plain, dual = dual_kernel_dims(Y_S3, 4)
    assert plain == dual
    assert plain == [0, 0, 5, 24, 78]


def test_deformed_nichols_algebra_is_at_least_as_big(Y_S3):
    dims = deformed_nichols_hilbert(Y_S3, 3, GenericParams(trials=2, seed=11))
    assert dims[:2] == [1, 3]
    assert all(d >= n for d, n in zip(dims, [1, 3, 4, 3]))


def test_deformed_degree_two_keeps_only_the_common_relations(Y_S3, QQ):
    psi = Y_S3.braiding()
    identity = Matrix.identity(9, QQ)
    common = Subspace.kernel_of(identity + psi).intersection(Subspace.kernel_of(identity + trivial_braiding(3, QQ)))
    assert common.dim == 1
    dims = deformed_nichols_hilbert(Y_S3, 3, GenericParams(trials=2, seed=11))
    assert dims[2] == 9 - common.dim == 8


def test_kaplansky_algebra(QQ):
    report = kaplansky_report(2, QQ)
    assert report.passed
    assert report.details["dimension"] == 8
    assert kaplansky_algebra(2, QQ).nichols.dims == [1, 2, 1, 0]


def test_bosonisation_is_a_bialgebra_on_relations(QQ):
    assert bosonisation_check(kaplansky_module(2, QQ), 3).passed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_central_pairing_of_the_unit(QQ, n):
    alg = kaplansky_algebra(2, QQ)
    report = central_pairing_report(alg, alg.unit(), n)
    assert report.passed
    assert report.details["epsilon"] == [1, 2, 6, 24][n - 1]


def test_central_pairing_of_the_top_form(QQ):
    alg = kaplansky_algebra(2, QQ)
    omega = {(w, alg.group.identity): x for w, x in alg.nichols.normal((0, 1)).items()}
    assert central_pairing_report(alg, omega, 1).passed
    # omega^2 = 0
    assert central_pairing(alg, omega, 2) == {}


def test_central_pairing_needs_a_central_commutator(QQ):
    alg = kaplansky_algebra(2, QQ)
    with pytest.raises(InvalidStructureError):
        central_pairing(alg, alg.generator(0), 1)
