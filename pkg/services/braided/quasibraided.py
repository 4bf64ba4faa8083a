from typing import Dict, List

from loguru import logger

from services.linalg.matrix import Matrix
from services.linalg.subspace import Subspace
from services.linalg.tensor import ensure_size, leg_permutation, tensor_power
from services.qyd.structure import QYDStructure, require_qyd
from .operators import Codomain, DegreeOperator, factorial_kernels


def _move_leg_to_end(position: int, n: int, dim: int, field) -> Matrix:
    """v_1..v_n -> v_1..v_{i-1} v_{i+1}..v_n v_i for i = position (from 1)."""
    perm = []
    for leg in range(n):
        if leg < position - 1:
            perm.append(leg)
        elif leg == position - 1:
            perm.append(n - 1)
        else:
            perm.append(leg - 1)
    return leg_permutation(perm, dim, field)


def _move_leg_to_front(position: int, n: int, dim: int, field) -> Matrix:
    perm = []
    for leg in range(n):
        if leg < position - 1:
            perm.append(leg + 1)
        elif leg == position - 1:
            perm.append(0)
        else:
            perm.append(leg)
    return leg_permutation(perm, dim, field)


def _column_block(q: QYDStructure, h: int, right: bool = False) -> Matrix:
    """e_h (x) L_h : V -> kG (x) V, or f -> (f o L_h) (x) h : V* -> V* (x) kG."""
    dim, order = q.dim, q.group.order
    dod: Dict[int, Dict[int, object]] = {}
    for (i, j), x in q.L[h].items():
        if right:
            dod.setdefault(j * order + h, {})[i] = x
        else:
            dod.setdefault(h * dim + i, {})[j] = x
    return Matrix.from_dod(dod, (order * dim, dim), q.field)


def quasibraided_integer(q: QYDStructure, n: int) -> DegreeOperator:
    """sum_i sum_h v_1..v_{i-1} (x) h(v_{i+1}..v_n) (x) h (x) L_h(v_i)."""
    dim, order, field = q.dim, q.group.order, q.field
    ensure_size(dim ** n, f"quasibraided integer [{n}]")
    total = Matrix.zeros((dim ** (n - 1) * order * dim, dim ** n), field)
    blocks = {h: _column_block(q, h) for h in q.L}
    for i in range(1, n + 1):
        move = _move_leg_to_end(i, n, dim, field)
        left = Matrix.identity(dim ** (i - 1), field)
        for h, block in blocks.items():
            acting = left.kron(tensor_power(q.module.rho[h], n - i)).kron(block)
            total = total + acting @ move
    return DegreeOperator(n, total, Codomain.QUASI_INTEGER, dim, order)


def quasibraided_factorial(q: QYDStructure, n: int, check: bool = True) -> DegreeOperator:
    """([n-1]!~ (x) id_kG (x) id_V) o [n]~, a map V^{(x)n} -> (kG (x) V)^{(x)n}."""
    if check:
        require_qyd(q)
    dim, order, field = q.dim, q.group.order, q.field
    result = Matrix.identity(1, field)
    for k in range(1, n + 1):
        result = result.kron(Matrix.identity(order * dim, field)) @ quasibraided_integer(q, k).matrix
    return DegreeOperator(n, result, Codomain.QUASI_FACTORIAL, dim, order)


def right_quasibraided_integer(q: QYDStructure, n: int) -> DegreeOperator:
    """sum_i sum_h (f_i o L_h) (x) h (x) (f_1 < h .. f_{i-1} < h) (x) f_{i+1}..f_n."""
    dim, order, field = q.dim, q.group.order, q.field
    ensure_size(dim ** n, f"right quasibraided integer [{n}]")
    total = Matrix.zeros((order * dim * dim ** (n - 1), dim ** n), field)
    blocks = {h: _column_block(q, h, right=True) for h in q.L}
    for i in range(1, n + 1):
        move = _move_leg_to_front(i, n, dim, field)
        tail = Matrix.identity(dim ** (n - i), field)
        for h, block in blocks.items():
            acting = block.kron(tensor_power(q.module.right_action(h), i - 1)).kron(tail)
            total = total + acting @ move
    return DegreeOperator(n, total, Codomain.RIGHT_INTEGER, dim, order)


def right_quasibraided_factorial(q: QYDStructure, n: int, check: bool = True) -> DegreeOperator:
    """(id_V* (x) id_kG (x) [n-1]!~_r) o [n]~_r on V*^{(x)n}."""
    if check:
        require_qyd(q)
    dim, order, field = q.dim, q.group.order, q.field
    result = Matrix.identity(1, field)
    for k in range(1, n + 1):
        result = Matrix.identity(order * dim, field).kron(result) @ right_quasibraided_integer(q, k).matrix
    return DegreeOperator(n, result, Codomain.RIGHT_FACTORIAL, dim, order)


def left_relations(q: QYDStructure, N: int) -> List[Subspace]:
    """ker [n]!~ for n = 0..N by the recursion ker = preimage of (ker [n-1]!~) (x) kG (x) V."""
    require_qyd(q)
    kernels = factorial_kernels(q.dim, q.field, lambda n: quasibraided_integer(q, n).matrix, N, extra_dim=q.group.order)
    logger.info(f"Left relation dimensions for {q.name or 'structure'}: {[k.dim for k in kernels]}")
    return kernels


def right_relations(q: QYDStructure, N: int) -> List[Subspace]:
    """ker [n]!~_r for n = 0..N; the previous kernel sits on the right legs."""
    require_qyd(q)
    dim, order, field = q.dim, q.group.order, q.field
    kernels = [Subspace.zero(1, field)]
    for n in range(1, N + 1):
        ensure_size(dim ** n, f"degree-{n} right relations")
        op = right_quasibraided_integer(q, n).matrix
        previous = kernels[-1]
        if previous.dim == 0:
            kernels.append(Subspace.kernel_of(op))
            continue
        quotient = Matrix.identity(order * dim, field).kron(previous.quotient_map())
        kernels.append(Subspace.kernel_of(quotient @ op))
    logger.info(f"Right relation dimensions for {q.name or 'structure'}: {[k.dim for k in kernels]}")
    return kernels
