from typing import Any, Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from core.exceptions import ShapeMismatchError
from .field import FieldSpec, Scalar, ScalarInput, same_field

SparseVector = Dict[int, Scalar]


class Matrix:
    """Exact matrix over a FieldSpec.

    Wraps a sparse sympy DomainMatrix. Instances are never mutated after
    construction; every operation returns a new Matrix. Basis vectors of a
    tensor product are ordered lexicographically, left factor most significant.
    """

    __slots__ = ("field", "dm", "_column_cache")

    def __init__(self, dm: DomainMatrix, field: FieldSpec):
        self.field = field
        self.dm = dm
        self._column_cache = None

    # construction

    @classmethod
    def from_dod(cls, dod: Mapping[int, Mapping[int, Scalar]], shape: Tuple[int, int], field: FieldSpec) -> "Matrix":
        """Build from {row: {col: field element}}; zero entries are dropped."""
        clean = {}
        for i, row in dod.items():
            kept = {j: x for j, x in row.items() if x}
            if kept:
                clean[i] = kept
        return cls(DomainMatrix(clean, shape, field.domain), field)

    @classmethod
    def from_entries(cls, entries: Mapping[Tuple[int, int], ScalarInput], shape: Tuple[int, int], field: FieldSpec) -> "Matrix":
        dod: Dict[int, Dict[int, Scalar]] = {}
        for (i, j), value in entries.items():
            x = field.element(value)
            if x:
                dod.setdefault(i, {})[j] = x
        return cls.from_dod(dod, shape, field)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarInput]], field: FieldSpec, cols: int = None) -> "Matrix":
        n_cols = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        return cls.from_entries(entries, (len(rows), n_cols), field)

    @classmethod
    def from_columns(cls, columns: Sequence[SparseVector], n_rows: int, field: FieldSpec) -> "Matrix":
        dod: Dict[int, Dict[int, Scalar]] = {}
        for j, column in enumerate(columns):
            for i, x in column.items():
                dod.setdefault(i, {})[j] = x
        return cls.from_dod(dod, (n_rows, len(columns)), field)

    @classmethod
    def from_row_vectors(cls, rows: Sequence[SparseVector], n_cols: int, field: FieldSpec) -> "Matrix":
        return cls.from_dod({i: row for i, row in enumerate(rows)}, (len(rows), n_cols), field)

    @classmethod
    def zeros(cls, shape: Tuple[int, int], field: FieldSpec) -> "Matrix":
        return cls.from_dod({}, shape, field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        one = field.one
        return cls.from_dod({i: {i: one} for i in range(n)}, (n, n), field)

    @classmethod
    def scalar(cls, n: int, value: Scalar, field: FieldSpec) -> "Matrix":
        return cls.from_dod({i: {i: value} for i in range(n)}, (n, n), field)

    @classmethod
    def permutation(cls, images: Sequence[int], field: FieldSpec) -> "Matrix":
        """Matrix sending basis vector j to basis vector images[j]."""
        one = field.one
        return cls.from_dod({images[j]: {j: one} for j in range(len(images))}, (len(images), len(images)), field)

    # inspection

    @property
    def shape(self) -> Tuple[int, int]:
        return self.dm.shape

    @property
    def rows(self) -> int:
        return self.dm.shape[0]

    @property
    def cols(self) -> int:
        return self.dm.shape[1]

    def dod(self) -> Dict[int, Dict[int, Scalar]]:
        return self.dm.to_sparse().rep

    def items(self) -> Iterator[Tuple[Tuple[int, int], Scalar]]:
        for i, row in self.dod().items():
            for j, x in row.items():
                yield (i, j), x

    def entry(self, i: int, j: int) -> Scalar:
        return self.dod().get(i, {}).get(j, self.field.zero)

    def column(self, j: int) -> SparseVector:
        return dict(self.columns()[j])

    def columns(self) -> List[SparseVector]:
        if self._column_cache is None:
            cols: List[SparseVector] = [{} for _ in range(self.cols)]
            for (i, j), x in self.items():
                cols[j][i] = x
            self._column_cache = cols
        return self._column_cache

    def row(self, i: int) -> SparseVector:
        return dict(self.dod().get(i, {}))

    def nnz(self) -> int:
        return sum(len(row) for row in self.dod().values())

    def is_zero(self) -> bool:
        return self.nnz() == 0

    def is_square(self) -> bool:
        return self.rows == self.cols

    def to_rows(self) -> List[List[Any]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), x in self.items():
            out[i][j] = self.field.to_json(x)
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape or self.field != other.field:
            return False
        return (self - other).is_zero()

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, {self.field.label}, nnz={self.nnz()})"

    # arithmetic

    def _check(self, other: "Matrix", operation: str) -> None:
        same_field(self.field, other.field, operation)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other, "add")
        if self.shape != other.shape:
            raise ShapeMismatchError("add", self.shape, other.shape)
        return Matrix(self.dm + other.dm, self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other, "sub")
        if self.shape != other.shape:
            raise ShapeMismatchError("sub", self.shape, other.shape)
        return Matrix(self.dm - other.dm, self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.dm, self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other, "matmul")
        if self.cols != other.rows:
            raise ShapeMismatchError("matmul", self.shape, other.shape)
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros((self.rows, other.cols), self.field)
        return Matrix(self.dm.matmul(other.dm), self.field)

    def scale(self, value: Scalar) -> "Matrix":
        if not value:
            return Matrix.zeros(self.shape, self.field)
        return Matrix.from_dod({i: {j: x * value for j, x in row.items()} for i, row in self.dod().items()}, self.shape, self.field)

    def transpose(self) -> "Matrix":
        return Matrix(self.dm.transpose(), self.field)

    def inverse(self) -> "Matrix":
        return Matrix(self.dm.to_dense().inv().to_sparse(), self.field)

    def apply(self, vector: SparseVector) -> SparseVector:
        """Multiply a sparse column vector."""
        out: SparseVector = {}
        columns = self.columns()
        for j, x in vector.items():
            for i, y in columns[j].items():
                out[i] = out.get(i, self.field.zero) + y * x
        return {i: x for i, x in out.items() if x}

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other, "kron")
        r, c = other.shape
        dod: Dict[int, Dict[int, Scalar]] = {}
        b_items = list(other.items())
        for (i, j), a in self.items():
            for (k, l), b in b_items:
                dod.setdefault(i * r + k, {})[j * c + l] = a * b
        return Matrix.from_dod(dod, (self.rows * r, self.cols * c), self.field)

    def vstack(self, *others: "Matrix") -> "Matrix":
        dod = {i: dict(row) for i, row in self.dod().items()}
        offset = self.rows
        for other in others:
            self._check(other, "vstack")
            if other.cols != self.cols:
                raise ShapeMismatchError("vstack", self.shape, other.shape)
            for i, row in other.dod().items():
                dod[offset + i] = dict(row)
            offset += other.rows
        return Matrix.from_dod(dod, (offset, self.cols), self.field)

    def hstack(self, *others: "Matrix") -> "Matrix":
        return self.transpose().vstack(*(o.transpose() for o in others)).transpose()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        row_pos = {r: k for k, r in enumerate(rows)}
        col_pos = {c: k for k, c in enumerate(cols)}
        dod: Dict[int, Dict[int, Scalar]] = {}
        for (i, j), x in self.items():
            if i in row_pos and j in col_pos:
                dod.setdefault(row_pos[i], {})[col_pos[j]] = x
        return Matrix.from_dod(dod, (len(rows), len(cols)), self.field)

    # elimination

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        """Reduced row echelon form and pivot columns.

        Fraction-free elimination over the rationals, Gauss-Jordan over GF(p).
        """
        if self.rows == 0 or self.cols == 0 or self.is_zero():
            return Matrix.zeros(self.shape, self.field), ()
        method = "CD" if self.field.characteristic == 0 else "GJ"
        reduced, pivots = self.dm.rref(method=method)
        return Matrix(reduced.to_sparse(), self.field), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> List[SparseVector]:
        """Basis of the right nullspace, one vector per non-pivot column."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        dod = reduced.dod()
        one = self.field.one
        basis: List[SparseVector] = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vector: SparseVector = {free: one}
            for r, p in enumerate(pivots):
                x = dod.get(r, {}).get(free)
                if x:
                    vector[p] = -x
            basis.append(vector)
        return basis


def kron_all(factors: Iterable[Matrix]) -> Matrix:
    factors = list(factors)
    result = factors[0]
    for factor in factors[1:]:
        result = result.kron(factor)
    return result


def vector_from_values(values: Mapping[int, ScalarInput], field: FieldSpec) -> SparseVector:
    out = {i: field.element(v) for i, v in values.items()}
    return {i: x for i, x in out.items() if x}


def add_into(target: SparseVector, source: SparseVector, coefficient: Scalar) -> None:
    if not coefficient:
        return
    for i, x in source.items():
        y = target.get(i)
        z = x * coefficient if y is None else y + x * coefficient
        if z:
            target[i] = z
        elif y is not None:
            del target[i]


def change_field(m: Matrix, target: FieldSpec) -> Matrix:
    """Reduce a rational matrix mod p (identity when the fields agree)."""
    if m.field == target:
        return m
    dod = {i: {j: target.reduce_from(m.field, x) for j, x in row.items()} for i, row in m.dod().items()}
    return Matrix.from_dod(dod, m.shape, target)
