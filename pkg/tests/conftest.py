import pytest

from core.config import get_settings
from services.cherednik.algebra import CherednikParams, cherednik_algebra
from services.cherednik.embedding import build_reflection_yd
from services.groups.fin_group import cyclic_group, symmetric_group, trivial_group
from services.linalg.field import FieldSpec
from services.linalg.matrix import Matrix
from services.modules.gmodule import GModule, reflection_module
from services.qyd.structure import QYDStructure


@pytest.fixture
def QQ():
    return FieldSpec.rationals()


@pytest.fixture
def GF3():
    return FieldSpec.prime(3)


@pytest.fixture
def GF5():
    return FieldSpec.prime(5)


@pytest.fixture
def S3():
    return symmetric_group(3)


@pytest.fixture
def C2():
    return cyclic_group(2)


@pytest.fixture
def C4():
    return cyclic_group(4)


@pytest.fixture
def trivial():
    return trivial_group()


@pytest.fixture
def refl_S3(S3, QQ):
    return reflection_module(S3, QQ)


@pytest.fixture
def Y_S3(refl_S3):
    return build_reflection_yd(refl_S3).y_g


@pytest.fixture
def pathological(C2, QQ):
    """C_2 acting by -1 on k^2 with beta(f1, v1) = 1, beta(f1, v2) = s."""
    module = GModule.from_generator_images(C2, [Matrix.scalar(2, QQ.element(-1), QQ)], QQ, name="V")
    s = C2.generator_ids[0]
    L = {
        C2.identity: Matrix.from_rows([[1, 0], [0, 0]], QQ),
        s: Matrix.from_rows([[0, 1], [0, 0]], QQ),
    }
    return QYDStructure(module=module, L=L, name="pathological")


@pytest.fixture
def H11_S3(refl_S3):
    def build(N):
        return cherednik_algebra(refl_S3, CherednikParams.uniform(1, 1), N)
    return build


@pytest.fixture(autouse=True)
def restore_settings():
    current = get_settings()
    saved = current.model_dump()
    yield
    for key, value in saved.items():
        setattr(current, key, value)
