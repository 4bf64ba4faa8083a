from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from math import isqrt
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.config import settings
from core.exceptions import BraidEquationError, OracleCapExceededError, ShapeMismatchError
from models.reports import CheckReport
from services.linalg.field import FieldSpec
from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.linalg.tensor import ensure_size, flip, on_legs


class Codomain(str, Enum):
    TENSOR = "tensor"              # V^{(x)n}
    QUASI_INTEGER = "quasi_integer"  # V^{(x)n-1} (x) kG (x) V
    QUASI_FACTORIAL = "quasi_factorial"  # (kG (x) V)^{(x)n}
    RIGHT_INTEGER = "right_integer"  # V* (x) kG (x) V*^{(x)n-1}
    RIGHT_FACTORIAL = "right_factorial"  # (V* (x) kG)^{(x)n}


@dataclass
class DegreeOperator:
    """A degree-n operator on V^{(x)n} with explicit codomain shape.

    Attributes:
        degree: n
        matrix: the operator
        codomain: which space the rows index
        dim: dim V
        order: |G| for quasibraided codomains, 1 otherwise
    """
    degree: int
    matrix: Matrix
    codomain: Codomain
    dim: int
    order: int = 1

    def __post_init__(self):
        n, d, g = self.degree, self.dim, self.order
        expected_rows = {
            Codomain.TENSOR: d ** n,
            Codomain.QUASI_INTEGER: d ** max(n - 1, 0) * g * d if n else 1,
            Codomain.QUASI_FACTORIAL: (g * d) ** n,
            Codomain.RIGHT_INTEGER: d ** max(n - 1, 0) * g * d if n else 1,
            Codomain.RIGHT_FACTORIAL: (g * d) ** n,
        }[self.codomain]
        if self.matrix.shape != (expected_rows, d ** n):
            raise ShapeMismatchError(f"degree-{n} {self.codomain.value} operator", self.matrix.shape, (expected_rows, d ** n))

    def kernel(self) -> Subspace:
        return Subspace.kernel_of(self.matrix)

    def rank(self) -> int:
        return self.matrix.rank()


def braiding_dim(psi: Matrix) -> int:
    d = isqrt(psi.rows)
    if psi.rows != psi.cols or d * d != psi.rows:
        raise ShapeMismatchError("braiding", psi.shape, (d * d, d * d))
    return d


def trivial_braiding(dim: int, field: FieldSpec) -> Matrix:
    """tau, the flip of V (x) V."""
    return flip(dim, dim, field)


def leg_braiding(psi: Matrix, position: int, n: int) -> Matrix:
    """Psi_{i,i+1} on V^{(x)n}, legs counted from 1."""
    d = braiding_dim(psi)
    return on_legs(psi, d, position - 1, n - position - 1)


def braid_equation_check(psi: Matrix) -> CheckReport:
    """Psi12 Psi23 Psi12 = Psi23 Psi12 Psi23 exactly; also reports invertibility."""
    d = braiding_dim(psi)
    p12 = leg_braiding(psi, 1, 3)
    p23 = leg_braiding(psi, 2, 3)
    lhs = p12 @ p23 @ p12
    rhs = p23 @ p12 @ p23
    invertible = psi.rank() == d * d
    if lhs != rhs:
        diff = lhs - rhs
        (i, j), _ = next(diff.items())
        return CheckReport.fail("braid_equation", {"column": j, "row": i}, invertible=invertible)
    return CheckReport.ok("braid_equation", invertible=invertible, dim=d)


def require_braiding(psi: Matrix) -> None:
    report = braid_equation_check(psi)
    if not report.passed:
        raise BraidEquationError(f"first differing entry {report.witness}")


def braided_integer(psi: Matrix, n: int, check: bool = False) -> DegreeOperator:
    """[n]_Psi = id + Psi_{n-1,n} + Psi_{n-1,n} Psi_{n-2,n-1} + ... + Psi_{n-1,n} ... Psi_{12}."""
    if check:
        require_braiding(psi)
    d = braiding_dim(psi)
    if n == 0:
        return DegreeOperator(0, Matrix.zeros((1, 1), psi.field), Codomain.TENSOR, d)
    ensure_size(d ** n, f"[{n}]_Psi")
    running = Matrix.identity(d ** n, psi.field)
    total = running
    for i in range(n - 1, 0, -1):
        running = running @ leg_braiding(psi, i, n)
        total = total + running
    return DegreeOperator(n, total, Codomain.TENSOR, d)


def braided_factorial(psi: Matrix, n: int, check: bool = False) -> DegreeOperator:
    """[n]!_Psi = ([n-1]!_Psi (x) id) o [n]_Psi, the Woronowicz symmetriser."""
    if check:
        require_braiding(psi)
    d = braiding_dim(psi)
    result = Matrix.identity(1, psi.field)
    for k in range(1, n + 1):
        result = result.kron(Matrix.identity(d, psi.field)) @ braided_integer(psi, k).matrix
    return DegreeOperator(n, result, Codomain.TENSOR, d)


def reduced_word(perm: Sequence[int]) -> List[int]:
    """Adjacent transpositions sorting perm by insertion sort, in application order."""
    array = list(perm)
    word: List[int] = []
    for i in range(1, len(array)):
        j = i
        while j > 0 and array[j - 1] > array[j]:
            array[j - 1], array[j] = array[j], array[j - 1]
            word.append(j)
            j -= 1
    return word


def woronowicz_oracle(psi: Matrix, n: int) -> DegreeOperator:
    """Sum over S_n of Psi_sigma, each along its insertion-sort reduced word."""
    if n > settings.ORACLE_CAP:
        raise OracleCapExceededError(n, settings.ORACLE_CAP)
    d = braiding_dim(psi)
    ensure_size(d ** n, f"oracle degree {n}")
    legs = [leg_braiding(psi, i, n) for i in range(1, n)] if n > 1 else []
    total = Matrix.zeros((d ** n, d ** n), psi.field)
    for perm in permutations(range(n)):
        term = Matrix.identity(d ** n, psi.field)
        for i in reduced_word(perm):
            term = legs[i - 1] @ term
        total = total + term
    return DegreeOperator(n, total, Codomain.TENSOR, d)


def factorial_kernels(
    dim: int,
    field: FieldSpec,
    integer: Callable[[int], Matrix],
    N: int,
    extra_dim: int = 1,
) -> List[Subspace]:
    """Kernels of F_n = (F_{n-1} (x) id) o integer(n) for n = 0..N.

    integer(n) maps V^{(x)n} into V^{(x)n-1} (x) X with dim X = extra_dim * dim
    (X = V for braided factorials, kG (x) V for quasibraided ones), and
    ker F_n is the preimage of ker F_{n-1} (x) X.
    """
    kernels = [Subspace.zero(1, field)]
    for n in range(1, N + 1):
        ensure_size(dim ** n, f"degree-{n} relations")
        previous = kernels[-1]
        op = integer(n)
        if previous.dim == 0:
            kernels.append(Subspace.kernel_of(op))
            continue
        quotient = previous.quotient_map().kron(Matrix.identity(extra_dim * dim, field))
        kernels.append(Subspace.kernel_of(quotient @ op))
        logger.debug(f"degree {n}: relation space of dimension {kernels[-1].dim}")
    return kernels


def nichols_kernels(psi: Matrix, N: int) -> List[Subspace]:
    d = braiding_dim(psi)
    return factorial_kernels(d, psi.field, lambda n: braided_integer(psi, n).matrix, N)


def dual_braiding(psi: Matrix) -> Matrix:
    """Psi* on V* (x) V*, the transpose in dual bases."""
    return psi.transpose()


def compatibility_holds(first: Matrix, second: Matrix) -> bool:
    """(Psi' (x) id)(id (x) Psi)(Psi (x) id) = (id (x) Psi)(Psi (x) id)(id (x) Psi') with Psi = first, Psi' = second."""
    p12, p23 = leg_braiding(first, 1, 3), leg_braiding(first, 2, 3)
    q12, q23 = leg_braiding(second, 1, 3), leg_braiding(second, 2, 3)
    return q12 @ p23 @ p12 == p23 @ p12 @ q23


def compatibility_failure(braidings: Sequence[Matrix]) -> Optional[Tuple[int, int]]:
    for a, first in enumerate(braidings):
        for b, second in enumerate(braidings):
            if a != b and not compatibility_holds(first, second):
                return a, b
    return None
