from .field import FieldKind, FieldSpec
from .matrix import Matrix, SparseVector, kron_all
from .subspace import Subspace

__all__ = ["FieldKind", "FieldSpec", "Matrix", "SparseVector", "Subspace", "kron_all"]
