from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np
from loguru import logger

from core.config import settings
from core.exceptions import (
    CompatibilityError,
    ConfigurationError,
    FieldMismatchError,
    GenericityInstabilityError,
)
from services.linalg.field import FieldSpec, ScalarInput
from services.linalg.matrix import Matrix, change_field
from services.linalg.subspace import Subspace
from services.modules.gmodule import GModule
from services.qyd.structure import QYDStructure, mix_structures
from .quasibraided import left_relations
from .operators import (
    Codomain,
    DegreeOperator,
    braided_integer,
    braiding_dim,
    compatibility_failure,
    factorial_kernels,
    trivial_braiding,
)


@dataclass
class GenericParams:
    """Random-specialization policy for generic parameters.

    Attributes:
        names: parameter names (for reports)
        trials: independent specializations, at least 2
        seed: numpy seed for reproducible samples
        prime: sampling field GF(prime), at least 2^31 - 1
    """
    names: List[str] = field(default_factory=list)
    trials: int = 3
    seed: int = 0
    prime: int = 2147483647

    def __post_init__(self):
        if self.trials < 2:
            raise ConfigurationError("trials", "generic parameters need at least 2 specializations")
        if self.prime < 2 ** 31 - 1:
            raise ConfigurationError("prime", f"sampling field GF({self.prime}) is smaller than 2^31 - 1")

    @classmethod
    def from_settings(cls, names: Sequence[str] = (), trials: Optional[int] = None, seed: Optional[int] = None) -> "GenericParams":
        return cls(
            names=list(names),
            trials=trials if trials is not None else settings.DEFAULT_TRIALS,
            seed=seed if seed is not None else settings.DEFAULT_SEED,
            prime=settings.GENERICITY_PRIME,
        )

    @property
    def target_field(self) -> FieldSpec:
        return FieldSpec(self.prime)

    def samples(self, count: int) -> List[List[int]]:
        """One row of `count` nonzero residues per trial."""
        rng = np.random.default_rng(self.seed)
        draws = rng.integers(1, self.prime, size=(self.trials, count), dtype=np.int64)
        return [[int(x) for x in row] for row in draws]


def sampling_field(source: FieldSpec, params: GenericParams) -> FieldSpec:
    target = params.target_field
    if source.characteristic not in (0, params.prime):
        raise FieldMismatchError(source.label, target.label, "generic specialization")
    return target


def stable_kernels(per_trial: List[List[Subspace]]) -> List[Subspace]:
    """The common kernels when every trial agrees degree by degree."""
    first = per_trial[0]
    for n in range(len(first)):
        if any(trial[n] != first[n] for trial in per_trial[1:]):
            raise GenericityInstabilityError(n, [trial[n].dim for trial in per_trial])
    return first


def run_trials(work: Callable[[List[int]], List[Subspace]], params: GenericParams, count: int) -> List[Subspace]:
    samples = params.samples(count)
    with ThreadPoolExecutor(max_workers=max(1, settings.THREADS)) as executor:
        per_trial = list(executor.map(work, samples))
    return stable_kernels(per_trial)


def deformed_integer(psi: Matrix, tau: Matrix, n: int, u) -> Matrix:
    return braided_integer(psi, n).matrix + braided_integer(tau, n).matrix.scale(u)


def require_tau_compatible(psi: Matrix) -> Matrix:
    d = braiding_dim(psi)
    tau = trivial_braiding(d, psi.field)
    failure = compatibility_failure([psi, tau])
    if failure is not None:
        raise CompatibilityError(*failure)
    return tau


def specialized_deformed_factorial(psi: Matrix, n: int, us: Sequence[ScalarInput]) -> DegreeOperator:
    """([2]_Psi + u_2 [2]_tau) ... ([n]_Psi + u_n [n]_tau) at explicit u = (u_2..u_n)."""
    tau = require_tau_compatible(psi)
    d = braiding_dim(psi)
    fld = psi.field
    result = Matrix.identity(d if n >= 1 else 1, fld)
    for k in range(2, n + 1):
        u = fld.element(us[k - 2])
        result = result.kron(Matrix.identity(d, fld)) @ deformed_integer(psi, tau, k, u)
    return DegreeOperator(n, result, Codomain.TENSOR, d)


def deformed_factorial(psi: Matrix, N: int, params: GenericParams) -> List[Subspace]:
    """Kernels of [n]!_{Psi,tau}, n = 0..N, at random u_k over GF(prime);
    returned only when all specializations agree."""
    require_tau_compatible(psi)
    target = sampling_field(psi.field, params)
    local_psi = change_field(psi, target)
    d = braiding_dim(psi)
    local_tau = trivial_braiding(d, target)

    def work(sample: List[int]) -> List[Subspace]:
        us = [target.element(x) for x in sample]

        def integer(n: int) -> Matrix:
            if n == 1:
                return Matrix.identity(d, target)
            return deformed_integer(local_psi, local_tau, n, us[n - 2])

        return factorial_kernels(d, target, integer, N)

    kernels = run_trials(work, params, max(N - 1, 1))
    logger.info(f"Deformed factorial kernels stable across {params.trials} trials: {[k.dim for k in kernels]}")
    return kernels


def mixed_relations(braidings: Sequence[Matrix], N: int) -> List[Subspace]:
    """I_n = intersection over k of ker((Q_{n-1} (x) id) [n]_{Psi_k}): the relations
    of a mixture with independent generic coefficients, computed exactly."""
    failure = compatibility_failure(braidings)
    if failure is not None:
        raise CompatibilityError(*failure)
    d = braiding_dim(braidings[0])
    fld = braidings[0].field
    kernels = [Subspace.zero(1, fld)]
    for n in range(1, N + 1):
        previous = kernels[-1]
        quotient = previous.quotient_map().kron(Matrix.identity(d, fld)) if previous.dim else None
        blocks = []
        for psi in braidings:
            op = braided_integer(psi, n).matrix
            blocks.append(quotient @ op if quotient is not None else op)
        kernels.append(Subspace.kernel_of(blocks[0].vstack(*blocks[1:])))
    return kernels


def generic_mixture_kernels(parts: Sequence[QYDStructure], N: int, params: GenericParams) -> List[Subspace]:
    """Minimal-double relations of t_1 delta_1 + ... + t_k delta_k at random t."""
    source = parts[0].field
    target = sampling_field(source, params)
    reduced_parts = []
    for q in parts:
        module = q.module
        rho = [change_field(m, target) for m in module.rho]
        local_module = GModule(group=module.group, dim=module.dim, rho=rho, field=target, name=module.name)
        reduced_parts.append(QYDStructure(module=local_module, L={h: change_field(m, target) for h, m in q.L.items()}))
    shared = reduced_parts[0].module
    reduced_parts = [QYDStructure(module=shared, L=q.L) for q in reduced_parts]

    def work(sample: List[int]) -> List[Subspace]:
        mixture = mix_structures([(target.element(t), q) for t, q in zip(sample, reduced_parts)])
        return left_relations(mixture, N)

    return run_trials(work, params, len(parts))
