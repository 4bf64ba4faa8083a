from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import ShapeMismatchError
from .field import FieldSpec, Scalar, same_field
from .matrix import Matrix, SparseVector, add_into


class Subspace:
    """A subspace of k^ambient held by its reduced row echelon basis.

    The RREF basis is canonical, so two Subspaces are equal exactly when their
    bases coincide. The quotient k^ambient / W is identified with the span of
    the non-pivot coordinates (the complement), in increasing order.

    Attributes:
        ambient: dimension of the surrounding space
        field: ground field
        basis: RREF rows, basis[i] has a 1 at pivots[i] and 0 at every other pivot
        pivots: pivot coordinates, increasing
    """

    __slots__ = ("ambient", "field", "basis", "pivots", "_complement", "_quotient")

    def __init__(self, ambient: int, field: FieldSpec, basis: List[SparseVector], pivots: Tuple[int, ...]):
        self.ambient = ambient
        self.field = field
        self.basis = basis
        self.pivots = pivots
        self._complement: Optional[List[int]] = None
        self._quotient: Optional[Matrix] = None

    @classmethod
    def span(cls, vectors: Sequence[SparseVector], ambient: int, field: FieldSpec) -> "Subspace":
        vectors = [v for v in vectors if v]
        if not vectors:
            return cls.zero(ambient, field)
        reduced, pivots = Matrix.from_row_vectors(vectors, ambient, field).rref()
        dod = reduced.dod()
        basis = [dict(dod.get(r, {})) for r in range(len(pivots))]
        return cls(ambient, field, basis, pivots)

    @classmethod
    def zero(cls, ambient: int, field: FieldSpec) -> "Subspace":
        return cls(ambient, field, [], ())

    @classmethod
    def full(cls, ambient: int, field: FieldSpec) -> "Subspace":
        one = field.one
        return cls(ambient, field, [{i: one} for i in range(ambient)], tuple(range(ambient)))

    @classmethod
    def kernel_of(cls, matrix: Matrix) -> "Subspace":
        return cls.span(matrix.kernel_basis(), matrix.cols, matrix.field)

    @classmethod
    def image_of(cls, matrix: Matrix) -> "Subspace":
        return cls.span(matrix.columns(), matrix.rows, matrix.field)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    @property
    def complement(self) -> List[int]:
        if self._complement is None:
            pivot_set = set(self.pivots)
            self._complement = [i for i in range(self.ambient) if i not in pivot_set]
        return self._complement

    def reduce(self, vector: SparseVector) -> SparseVector:
        """Normal form of vector modulo this subspace (zero at every pivot)."""
        out = dict(vector)
        for row, p in zip(self.basis, self.pivots):
            x = out.get(p)
            if x:
                add_into(out, row, -x)
        return out

    def contains(self, vector: SparseVector) -> bool:
        return not self.reduce(vector)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def quotient_map(self) -> Matrix:
        """Matrix of k^ambient -> k^ambient / W in complement coordinates."""
        if self._quotient is None:
            position = {c: k for k, c in enumerate(self.complement)}
            one = self.field.one
            dod: Dict[int, Dict[int, Scalar]] = {k: {c: one} for c, k in position.items()}
            for row, p in zip(self.basis, self.pivots):
                for c, x in row.items():
                    if c in position:
                        dod[position[c]][p] = -x
            self._quotient = Matrix.from_dod(dod, (len(position), self.ambient), self.field)
        return self._quotient

    def quotient_coordinates(self, vector: SparseVector) -> SparseVector:
        reduced = self.reduce(vector)
        position = {c: k for k, c in enumerate(self.complement)}
        return {position[c]: x for c, x in reduced.items()}

    def lift(self, coordinates: SparseVector) -> SparseVector:
        complement = self.complement
        return {complement[k]: x for k, x in coordinates.items() if x}

    def section(self) -> Matrix:
        """Inclusion of the complement coordinates into k^ambient."""
        one = self.field.one
        return Matrix.from_dod({c: {k: one} for k, c in enumerate(self.complement)}, (self.ambient, self.codim), self.field)

    def _check(self, other: "Subspace", operation: str) -> None:
        same_field(self.field, other.field, operation)
        if self.ambient != other.ambient:
            raise ShapeMismatchError(operation, (self.ambient,), (other.ambient,))

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other, "subspace sum")
        return Subspace.span(self.basis + other.basis, self.ambient, self.field)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other, "subspace intersection")
        if self.dim == self.ambient:
            return other
        if other.dim == other.ambient:
            return self
        return Subspace.kernel_of(self.quotient_map().vstack(other.quotient_map()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.field == other.field
            and self.pivots == other.pivots
            and all(a == b for a, b in zip(self.basis, other.basis))
        )

    def image(self, matrix: Matrix) -> "Subspace":
        return Subspace.span([matrix.apply(v) for v in self.basis], matrix.rows, self.field)

    def preimage(self, matrix: Matrix) -> "Subspace":
        """{x : matrix x in self}."""
        return Subspace.kernel_of(self.quotient_map() @ matrix)

    def basis_matrix(self) -> Matrix:
        """Basis vectors as columns."""
        return Matrix.from_columns(self.basis, self.ambient, self.field)

    def to_json(self) -> List[Dict[str, object]]:
        return [{str(i): self.field.to_json(x) for i, x in sorted(v.items())} for v in self.basis]

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, {self.field.label})"

