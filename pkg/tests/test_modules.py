import pytest

from core.exceptions import InvalidStructureError, NonEquivariantMapError
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.modules.gmodule import (
    GModule,
    character_module,
    direct_sum,
    dual_module,
    permutation_module,
    reflection_module,
    sign_module,
    stable_under,
    tensor_module,
    tensor_power_module,
    trivial_module,
)
from services.modules.yd_module import YDModule


def as_json(module):
    return [module.field.to_json(x) for x in module.character()]


def test_reflection_module_character(refl_S3, S3):
    assert refl_S3.dim == 2
    assert refl_S3.check().passed
    expected = {"()": 2, "(1 2)": 0, "(2 3)": 0, "(1 3)": 0, "(1 2 3)": -1, "(1 3 2)": -1}
    assert dict(zip(S3.labels, as_json(refl_S3))) == expected


def test_reflection_module_is_absolutely_irreducible_over_QQ(refl_S3):
    assert refl_S3.commutant_dimension() == 1
    assert refl_S3.fixed_subspace().dim == 0


def test_reflection_module_has_fixed_vector_in_characteristic_3(S3, GF3):
    # e1 + e2 + e3 has coordinate sum zero mod 3
    assert reflection_module(S3, GF3).fixed_subspace().dim == 1


def test_permutation_and_sign_modules(S3, QQ):
    perm = permutation_module(S3, QQ)
    assert sorted(as_json(perm)) == [0, 0, 1, 1, 1, 3]
    sign = sign_module(S3, QQ)
    assert sorted(as_json(sign)) == [-1, -1, -1, 1, 1, 1]
    assert as_json(tensor_module(sign, sign)) == [1] * 6
    assert direct_sum(trivial_module(S3, QQ), reflection_module(S3, QQ)).character() == perm.character()


def test_dual_and_tensor_power(refl_S3):
    dual = dual_module(refl_S3)
    assert dual.check().passed
    assert dual.character() == refl_S3.character()
    square = tensor_power_module(refl_S3, 2)
    assert square.dim == 4
    assert square.check().passed


def test_dual_is_an_involution(refl_S3, S3, GF5):
    for module in (refl_S3, reflection_module(S3, GF5), sign_module(S3, GF5)):
        twice = dual_module(dual_module(module))
        assert twice.rho == module.rho
        assert twice.character() == module.character()


def test_tensor_power_is_an_iterated_tensor_product(refl_S3):
    cube = tensor_power_module(refl_S3, 3)
    assert cube.rho == tensor_module(tensor_module(refl_S3, refl_S3), refl_S3).rho
    assert cube.character() == [x * x * x for x in refl_S3.character()]
    assert tensor_power_module(refl_S3, 1).rho == refl_S3.rho


def test_generator_images_must_define_a_representation(C2, QQ):
    with pytest.raises(InvalidStructureError):
        GModule.from_generator_images(C2, [Matrix.scalar(1, QQ.element(2), QQ)], QQ)


def test_character_module_rejects_non_multiplicative_values(C2, QQ):
    with pytest.raises(InvalidStructureError):
        character_module(C2, [1, 2], QQ)


def test_intertwiners(refl_S3, S3, QQ):
    identity = Matrix.identity(2, QQ)
    assert refl_S3.is_intertwiner(refl_S3, identity)
    shear = Matrix.from_rows([[1, 1], [0, 1]], QQ)
    assert not refl_S3.is_intertwiner(refl_S3, shear)
    with pytest.raises(NonEquivariantMapError):
        refl_S3.require_intertwiner(refl_S3, shear, "shear")


def test_stable_under(refl_S3, QQ):
    square = tensor_power_module(refl_S3, 2)
    full = Subspace.full(square.dim, QQ)
    assert stable_under(refl_S3, 2, full)
    line = Subspace.span([{0: QQ.one}], square.dim, QQ)
    assert not stable_under(refl_S3, 2, line)


def test_yd_module_braiding(Y_S3, S3):
    assert Y_S3.dim == 3
    assert Y_S3.check().passed
    psi = Y_S3.braiding()
    assert psi.shape == (9, 9)
    assert psi.rank() == 9


def test_trivially_graded_braiding_is_the_flip(refl_S3, QQ):
    y = YDModule.trivially_graded(refl_S3)
    psi = y.braiding()
    assert psi @ psi == Matrix.identity(4, QQ)


def test_bad_grading_is_rejected(refl_S3, S3):
    # a transposition degree on the whole module is not conjugation-invariant
    y = YDModule.from_degrees(refl_S3, [S3.element("(1 2)")] * 2)
    assert not y.check().passed
    with pytest.raises(InvalidStructureError):
        y.braiding()
