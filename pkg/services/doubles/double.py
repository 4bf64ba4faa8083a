from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from core.exceptions import ShapeMismatchError, TruncationExceededError
from models.reports import CheckReport
from services.groups.fin_group import FinGroup
from services.linalg.field import FieldSpec, Scalar
from services.linalg.subspace import Subspace
from services.linalg.tensor import Word, index_word, word_index
from services.qyd.structure import QYDStructure

# (left word over V, group element id, right word over V*)
TermKey = Tuple[Word, int, Word]


class GeneratorKind(str, Enum):
    V = "v"
    G = "g"
    F = "f"


Generator = Tuple[GeneratorKind, int]


def accumulate(target: Dict, key, value: Scalar) -> None:
    """target[key] += value, dropping the key when the sum vanishes."""
    total = target.get(key)
    total = value if total is None else total + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


@dataclass
class DoubleSpec:
    """A braided double T(V)/I- (x) kG (x) T(V*)/I+ truncated at degree N.

    Attributes:
        qyd: the quasi-YD structure giving the commutator f.v - v.f
        truncation: largest word length handled
        left_relations: I-_n inside V^{(x)n}, n = 0..N
        right_relations: I+_n inside V*^{(x)n}, n = 0..N
        name: descriptive name
    """
    qyd: QYDStructure
    truncation: int
    left_relations: List[Subspace]
    right_relations: List[Subspace]
    name: str = ""

    def __post_init__(self):
        expected = self.truncation + 1
        for side, spaces in (("left", self.left_relations), ("right", self.right_relations)):
            if len(spaces) != expected:
                raise ShapeMismatchError(f"{side} relations", (len(spaces),), (expected,))
            for n, space in enumerate(spaces):
                if space.ambient != self.qyd.dim ** n:
                    raise ShapeMismatchError(f"{side} relations in degree {n}", (space.ambient,), (self.qyd.dim ** n,))

    @classmethod
    def free(cls, q: QYDStructure, N: int) -> "DoubleSpec":
        zero = [Subspace.zero(q.dim ** n, q.field) for n in range(N + 1)]
        return cls(qyd=q, truncation=N, left_relations=zero, right_relations=list(zero), name=f"free double of {q.name}")

    @property
    def dim(self) -> int:
        return self.qyd.dim

    @property
    def group(self) -> FinGroup:
        return self.qyd.group

    @property
    def field(self) -> FieldSpec:
        return self.qyd.field

    def relations(self, side: str) -> List[Subspace]:
        return self.left_relations if side == "left" else self.right_relations

    def basis_words(self, side: str, n: int) -> List[Word]:
        """Complement words spanning the degree-n quotient, in lex order."""
        self.require_degree(n)
        return [index_word(i, n, self.dim) for i in self.relations(side)[n].complement]

    def quotient_dims(self, side: str) -> List[int]:
        return [space.codim for space in self.relations(side)]

    def require_degree(self, n: int) -> None:
        if n > self.truncation:
            raise TruncationExceededError(n, self.truncation)

    def ideal_growth_check(self) -> CheckReport:
        """I_n contains V (x) I_{n-1} and I_{n-1} (x) V on both sides."""
        d = self.dim
        for side in ("left", "right"):
            spaces = self.relations(side)
            for n in range(2, self.truncation + 1):
                below, here = spaces[n - 1], spaces[n]
                for vector in below.basis:
                    for letter in range(d):
                        right_grown = {i * d + letter: x for i, x in vector.items()}
                        left_grown = {letter * d ** (n - 1) + i: x for i, x in vector.items()}
                        if not here.contains(right_grown) or not here.contains(left_grown):
                            return CheckReport.fail("ideal_growth", {"side": side, "degree": n})
        return CheckReport.ok("ideal_growth", truncation=self.truncation)


@dataclass
class NormalFormElement:
    """Finite sum of monomials v_{i1}..v_{im} . g . f_{j1}..f_{jn}.

    Attributes:
        field: coefficient field
        terms: (left word, group element, right word) -> nonzero coefficient
    """
    field: FieldSpec
    terms: Dict[TermKey, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: x for k, x in self.terms.items() if x}

    @classmethod
    def zero(cls, fld: FieldSpec) -> "NormalFormElement":
        return cls(field=fld)

    @classmethod
    def monomial(cls, fld: FieldSpec, left: Word = (), g: int = 0, right: Word = (), coefficient: Optional[Scalar] = None) -> "NormalFormElement":
        return cls(field=fld, terms={(tuple(left), g, tuple(right)): fld.one if coefficient is None else coefficient})

    def __add__(self, other: "NormalFormElement") -> "NormalFormElement":
        out = dict(self.terms)
        for key, x in other.terms.items():
            accumulate(out, key, x)
        return NormalFormElement(self.field, out)

    def __sub__(self, other: "NormalFormElement") -> "NormalFormElement":
        return self + other.scale(-self.field.one)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalFormElement):
            return NotImplemented
        return self.terms == other.terms

    def scale(self, value: Scalar) -> "NormalFormElement":
        return NormalFormElement(self.field, {k: x * value for k, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[TermKey, Scalar]]:
        return iter(sorted(self.terms.items()))

    def group_part(self) -> Dict[int, Scalar]:
        """The epsilon- (x) id (x) epsilon+ projection onto kG."""
        return {g: x for (left, g, right), x in self.terms.items() if not left and not right}

    def to_text(self, group: FinGroup) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (left, g, right), x in self.items():
            coefficient = self.field.to_json(x)
            parts.append(f"{coefficient} * {list(left)} * {group.label(g)} * {list(right)}")
        return " + ".join(parts)


class DoubleEngine:
    """Multiplication of normal forms in a DoubleSpec.

    Products are formed in the free double by the closed rules

        g . v = g(v) . g,          f . g = g . (f < g),
        f . x_1..x_m = x_1..x_m . f + sum_i sum_h <f, L_h x_i> x_1..x_{i-1} h(x_{i+1}..x_m) . h

    (the letters of a right word are moved past a left word from the right end),
    and the result is reduced degreewise onto the complement of the relations.
    """

    def __init__(self, spec: DoubleSpec):
        q = spec.qyd
        self.spec = spec
        self.group = q.group
        self.field = q.field
        self.dim = q.dim
        self.identity = self.group.identity
        self._left_columns = [m.columns() for m in q.module.rho]
        self._right_columns = [m.transpose().columns() for m in q.module.rho]
        self._beta: Dict[Tuple[int, int], Dict[int, Scalar]] = {
            (a, b): q.beta(a, b) for a in range(self.dim) for b in range(self.dim)
        }
        self._act_left: Dict[Tuple[int, Word], Dict[Word, Scalar]] = {}
        self._act_right: Dict[Tuple[Word, int], Dict[Word, Scalar]] = {}
        self._letter: Dict[Tuple[int, Word], Dict[TermKey, Scalar]] = {}
        self._passed: Dict[Tuple[Word, Word], Dict[TermKey, Scalar]] = {}
        self._normal: Dict[Tuple[str, Word], Dict[Word, Scalar]] = {}

    # actions on words

    def _act(self, columns: List[Dict[int, Scalar]], word: Word) -> Dict[Word, Scalar]:
        result: Dict[Word, Scalar] = {(): self.field.one}
        for letter in word:
            step: Dict[Word, Scalar] = {}
            for w, c in result.items():
                for i, x in columns[letter].items():
                    accumulate(step, w + (i,), c * x)
            result = step
        return result

    def act_left(self, g: int, word: Word) -> Dict[Word, Scalar]:
        """g(x_1..x_m) = g(x_1)..g(x_m)."""
        if g == self.identity:
            return {word: self.field.one}
        key = (g, word)
        if key not in self._act_left:
            self._act_left[key] = self._act(self._left_columns[g], word)
        return self._act_left[key]

    def act_right(self, word: Word, g: int) -> Dict[Word, Scalar]:
        """(f_1..f_n) < g = (f_1 < g)..(f_n < g)."""
        if g == self.identity:
            return {word: self.field.one}
        key = (word, g)
        if key not in self._act_right:
            self._act_right[key] = self._act(self._right_columns[g], word)
        return self._act_right[key]

    # commutation in the free double

    def letter_past_word(self, f: int, word: Word) -> Dict[TermKey, Scalar]:
        """f . x_1..x_m in the free double."""
        key = (f, word)
        if key not in self._letter:
            out: Dict[TermKey, Scalar] = {(word, self.identity, (f,)): self.field.one}
            for i, x in enumerate(word):
                for h, c in self._beta[(f, x)].items():
                    for tail, c2 in self.act_left(h, word[i + 1:]).items():
                        accumulate(out, (word[:i] + tail, h, ()), c * c2)
            self._letter[key] = out
        return self._letter[key]

    def right_word_past_left_word(self, phi: Word, word: Word) -> Dict[TermKey, Scalar]:
        """phi . b in the free double, as a sum of b' . h . chi."""
        key = (phi, word)
        if key in self._passed:
            return self._passed[key]
        current: Dict[TermKey, Scalar] = {(word, self.identity, ()): self.field.one}
        for f in reversed(phi):
            step: Dict[TermKey, Scalar] = {}
            for (x, h, chi), c in current.items():
                for (x2, h2, chi2), c2 in self.letter_past_word(f, x).items():
                    if chi2:
                        for moved, c3 in self._right_columns[h][f].items():
                            accumulate(step, (x2, h, (moved,) + chi), c * c2 * c3)
                    else:
                        accumulate(step, (x2, self.group.mul(h2, h), chi), c * c2)
            current = step
        self._passed[key] = current
        return current

    def multiply_monomials(self, first: TermKey, second: TermKey) -> Dict[TermKey, Scalar]:
        """(a g phi)(b k psi) = sum a g(b') . g h k . (chi < k) psi over phi . b = sum b' h chi."""
        a, g, phi = first
        b, k, psi = second
        out: Dict[TermKey, Scalar] = {}
        for (x, h, chi), c in self.right_word_past_left_word(phi, b).items():
            ghk = self.group.mul(self.group.mul(g, h), k)
            for gx, c1 in self.act_left(g, x).items():
                for chik, c2 in self.act_right(chi, k).items():
                    accumulate(out, (a + gx, ghk, chik + psi), c * c1 * c2)
        return out

    # reduction

    def normal_word(self, side: str, word: Word) -> Dict[Word, Scalar]:
        """A word reduced onto the complement of the degree-len(word) relations."""
        key = (side, word)
        if key not in self._normal:
            n = len(word)
            self.spec.require_degree(n)
            space = self.spec.relations(side)[n]
            if space.dim == 0:
                self._normal[key] = {word: self.field.one}
            else:
                reduced = space.reduce({word_index(word, self.dim): self.field.one})
                self._normal[key] = {index_word(i, n, self.dim): x for i, x in reduced.items()}
        return self._normal[key]

    def reduce_terms(self, terms: Dict[TermKey, Scalar]) -> NormalFormElement:
        out: Dict[TermKey, Scalar] = {}
        for (left, g, right), c in terms.items():
            for left2, c1 in self.normal_word("left", left).items():
                for right2, c2 in self.normal_word("right", right).items():
                    accumulate(out, (left2, g, right2), c * c1 * c2)
        return NormalFormElement(self.field, out)

    def reduce_vector(self, side: str, vector: Dict[int, Scalar], n: int) -> Dict[Word, Scalar]:
        space = self.spec.relations(side)[n]
        return {index_word(i, n, self.dim): x for i, x in space.reduce(vector).items()}

    # public multiplication

    def multiply(self, first: NormalFormElement, second: NormalFormElement) -> NormalFormElement:
        raw: Dict[TermKey, Scalar] = {}
        for m1, c1 in first.terms.items():
            for m2, c2 in second.terms.items():
                for key, c in self.multiply_monomials(m1, m2).items():
                    accumulate(raw, key, c1 * c2 * c)
        return self.reduce_terms(raw)

    def generator(self, token: Generator) -> NormalFormElement:
        kind, index = token
        kind = GeneratorKind(kind)
        if kind == GeneratorKind.V:
            return self.reduce_terms({((index,), self.identity, ()): self.field.one})
        if kind == GeneratorKind.F:
            return self.reduce_terms({((), self.identity, (index,)): self.field.one})
        return NormalFormElement.monomial(self.field, g=index)

    def one(self) -> NormalFormElement:
        return NormalFormElement.monomial(self.field, g=self.identity)

    def straighten(self, word: Sequence[Generator]) -> NormalFormElement:
        result = self.one()
        for token in word:
            result = self.multiply(result, self.generator(token))
        return result

    def commutator(self, first: NormalFormElement, second: NormalFormElement) -> NormalFormElement:
        return self.multiply(first, second) - self.multiply(second, first)

    def beta_element(self, a: int, b: int) -> NormalFormElement:
        return NormalFormElement(self.field, {((), h, ()): x for h, x in self._beta[(a, b)].items()})


def straighten(spec: DoubleSpec, word: Sequence[Generator], engine: Optional[DoubleEngine] = None) -> NormalFormElement:
    """Normal form of a product of V-, G- and V*-generators."""
    engine = engine or DoubleEngine(spec)
    return engine.straighten(word)


def generator_label(token: Generator, group: FinGroup) -> str:
    kind, index = token
    kind = GeneratorKind(kind)
    if kind == GeneratorKind.G:
        return group.label(index)
    return f"{kind.value}{index + 1}"


def generator_set(spec: DoubleSpec) -> List[Generator]:
    """V basis, the group generators and the V* basis."""
    gens: List[Generator] = [(GeneratorKind.V, i) for i in range(spec.dim)]
    gens += [(GeneratorKind.G, g) for g in spec.group.generator_ids]
    gens += [(GeneratorKind.F, j) for j in range(spec.dim)]
    return gens


def associativity_witnesses(spec: DoubleSpec, seed: int = 0, samples: int = 100, engine: Optional[DoubleEngine] = None) -> CheckReport:
    """straighten((xy)z) = straighten(x(yz)) for all generator triples and for
    `samples` seeded random words of length at most 3, split at random."""
    engine = engine or DoubleEngine(spec)
    group = spec.group
    gens = generator_set(spec)
    elements = {token: engine.generator(token) for token in gens}

    def mismatch(x: NormalFormElement, y: NormalFormElement, z: NormalFormElement) -> bool:
        return engine.multiply(engine.multiply(x, y), z) != engine.multiply(x, engine.multiply(y, z))

    if spec.truncation >= 2:
        for a in gens:
            for b in gens:
                for c in gens:
                    v_degree = sum(1 for t in (a, b, c) if t[0] == GeneratorKind.V)
                    f_degree = sum(1 for t in (a, b, c) if t[0] == GeneratorKind.F)
                    if max(v_degree, f_degree) > spec.truncation:
                        continue
                    if mismatch(elements[a], elements[b], elements[c]):
                        witness = [generator_label(t, group) for t in (a, b, c)]
                        logger.warning(f"Associativity fails on {witness}")
                        return CheckReport.fail("associativity", {"triple": witness})

    rng = np.random.default_rng(seed)
    kinds = [GeneratorKind.V, GeneratorKind.G, GeneratorKind.F]
    length = min(3, spec.truncation)
    checked = 0
    for _ in range(samples):
        tokens: List[Generator] = []
        for _ in range(length):
            kind = kinds[int(rng.integers(0, 3))]
            bound = group.order if kind == GeneratorKind.G else spec.dim
            tokens.append((kind, int(rng.integers(0, bound))))
        cut1 = int(rng.integers(0, length + 1))
        cut2 = int(rng.integers(cut1, length + 1))
        parts = [engine.straighten(tokens[:cut1]), engine.straighten(tokens[cut1:cut2]), engine.straighten(tokens[cut2:])]
        if mismatch(*parts):
            witness = [generator_label(t, group) for t in tokens]
            return CheckReport.fail("associativity", {"word": witness, "cuts": [cut1, cut2]})
        checked += 1
    return CheckReport.ok("associativity", generators=len(gens), random_words=checked, seed=seed)
