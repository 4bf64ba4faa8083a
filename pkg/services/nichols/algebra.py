from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from loguru import logger

from core.exceptions import InvalidStructureError, TruncationExceededError
from services.braided.genericity import GenericParams, deformed_factorial
from services.braided.operators import dual_braiding, nichols_kernels
from services.linalg.field import FieldSpec, Scalar, ScalarInput
from services.linalg.subspace import Subspace
from services.linalg.tensor import Word, index_word, word_index
from services.modules.gmodule import GModule, is_submodule, tensor_module
from services.modules.yd_module import YDModule

Element = Dict[Word, Scalar]


def _add(target: Element, key: Word, value: Scalar) -> None:
    total = target.get(key)
    total = value if total is None else total + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


@dataclass
class TruncatedGradedAlgebra:
    """T(V) modulo homogeneous relations, known up to degree N.

    Elements are dicts from complement words to coefficients.

    Attributes:
        module: the generating module V
        truncation: N
        relations: relation space in V^{(x)n}, n = 0..N
        name: descriptive name
    """
    module: GModule
    truncation: int
    relations: List[Subspace]
    name: str = ""
    _products: Dict[Tuple[Word, Word], Element] = field(default_factory=dict, repr=False)

    @property
    def field(self) -> FieldSpec:
        return self.module.field

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def dims(self) -> List[int]:
        return [space.codim for space in self.relations]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def complement(self, n: int) -> List[Word]:
        return [index_word(i, n, self.dim) for i in self.relations[n].complement]

    def vanishing_degree(self) -> Optional[int]:
        """First degree whose component is zero; every later one is zero too."""
        for n, d in enumerate(self.dims):
            if d == 0:
                return n
        return None

    def normal(self, word: Word) -> Element:
        n = len(word)
        if n > self.truncation:
            top = self.vanishing_degree()
            if top is not None and n >= top:
                return {}
            raise TruncationExceededError(n, self.truncation)
        space = self.relations[n]
        if space.dim == 0:
            return {word: self.field.one}
        reduced = space.reduce({word_index(word, self.dim): self.field.one})
        return {index_word(i, n, self.dim): x for i, x in reduced.items()}

    def element(self, terms: Mapping[Word, ScalarInput]) -> Element:
        out: Element = {}
        for word, value in terms.items():
            x = self.field.element(value)
            for w, c in self.normal(tuple(word)).items():
                _add(out, w, x * c)
        return out

    def generator(self, index: int) -> Element:
        return self.normal((index,))

    def one(self) -> Element:
        return {(): self.field.one}

    def word_product(self, first: Word, second: Word) -> Element:
        key = (first, second)
        if key not in self._products:
            self._products[key] = self.normal(first + second)
        return self._products[key]

    def product(self, a: Element, b: Element) -> Element:
        out: Element = {}
        for u, x in a.items():
            for w, y in b.items():
                for v, c in self.word_product(u, w).items():
                    _add(out, v, x * y * c)
        return out

    def structure_constants(self, n: int, m: int) -> Dict[Tuple[int, int], Element]:
        """Products of the degree-n and degree-m complement bases."""
        left, right = self.complement(n), self.complement(m)
        return {(i, j): self.word_product(u, w) for i, u in enumerate(left) for j, w in enumerate(right)}


def nichols_product(alg: TruncatedGradedAlgebra, a: Element, b: Element) -> Element:
    return alg.product(a, b)


def nichols_algebra(y: YDModule, N: int) -> TruncatedGradedAlgebra:
    """B(Y) = T(Y) / ker Wor(Psi) up to degree N."""
    kernels = nichols_kernels(y.braiding(), N)
    return TruncatedGradedAlgebra(module=y.base, truncation=N, relations=kernels, name=f"B({y.name})")


def nichols_hilbert(y: YDModule, N: int) -> List[int]:
    """dim B(Y)_n = rank [n]!_Psi for n = 0..N."""
    dims = nichols_algebra(y, N).dims
    logger.info(f"Nichols algebra of {y.name or 'Y'}: {dims}")
    return dims


def deformed_nichols_hilbert(y: YDModule, N: int, params: GenericParams) -> List[int]:
    """Graded dimensions of B_tau(Y) at generic u; never below those of B(Y)."""
    psi = y.braiding()
    kernels = deformed_factorial(psi, N, params)
    dims = [space.codim for space in kernels]
    nichols = nichols_hilbert(y, N)
    for n, (deformed, plain) in enumerate(zip(dims, nichols)):
        if deformed < plain:
            raise InvalidStructureError("deformed Nichols algebra", f"degree {n} has dimension {deformed} below {plain}")
    logger.info(f"Deformed Nichols algebra of {y.name or 'Y'}: {dims}")
    return dims


def relations_are_stable(module: GModule, relations: List[Subspace]) -> bool:
    """rho(g)^{(x)n} maps every relation space into itself."""
    power = module
    for n, space in enumerate(relations[1:], start=1):
        if n > 1:
            power = tensor_module(power, module)
        if not is_submodule(power, space):
            logger.debug(f"Relations of degree {n} are not G-stable")
            return False
    return True


def dual_kernel_dims(y: YDModule, N: int) -> Tuple[List[int], List[int]]:
    """dim ker [n]!_Psi and dim ker [n]!_{Psi*}, n = 0..N."""
    psi = y.braiding()
    plain = [space.dim for space in nichols_kernels(psi, N)]
    dual = [space.dim for space in nichols_kernels(dual_braiding(psi), N)]
    return plain, dual
