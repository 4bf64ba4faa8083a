from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from sympy.combinatorics import Permutation

from core.config import settings
from core.exceptions import ConfigurationError, GroupOverflowError

Perm = Tuple[int, ...]


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class.

    Attributes:
        representative: smallest element id in the class
        members: sorted element ids
    """
    representative: int
    members: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def compose(g: Perm, h: Perm) -> Perm:
    """(g*h)(x) = g(h(x))."""
    return tuple(g[x] for x in h)


def cycle_label(perm: Perm) -> str:
    cycles = Permutation(list(perm)).cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


def parse_permutation(spec, degree: int) -> Perm:
    """Permutation of {1..degree} from cycle notation ("(1 2 3)(4 5)"), a list of
    cycles ([[1, 2, 3]]) or one-line notation ([2, 3, 1])."""
    if isinstance(spec, str):
        text = spec.replace(",", " ").strip()
        cycles = []
        for chunk in text.split(")"):
            chunk = chunk.strip().lstrip("(").strip()
            if chunk:
                cycles.append([int(x) - 1 for x in chunk.split()])
        perm = Permutation(cycles, size=degree) if cycles else Permutation(list(range(degree)))
    elif spec and isinstance(spec[0], (list, tuple)):
        perm = Permutation([[int(x) - 1 for x in c] for c in spec], size=degree)
    else:
        perm = Permutation([int(x) - 1 for x in spec])
    array = tuple(perm.array_form)
    if len(array) != degree or sorted(array) != list(range(degree)):
        raise ConfigurationError("group.generators", f"{spec} is not a permutation of 1..{degree}")
    return array


@dataclass
class FinGroup:
    """A finite permutation group with elements numbered in BFS discovery order.

    Element 0 is the identity. Element k > 0 was discovered as
    perms[parents[k][0]] * generator parents[k][1], which is how module
    matrices are extended from generator images.

    Attributes:
        degree: size of the permuted set
        perms: element id -> permutation (0-based images)
        generators: generator permutations in input order
        parents: element id -> (parent id, generator position), None for the identity
        name: optional descriptive name
    """
    degree: int
    perms: List[Perm]
    generators: List[Perm]
    parents: List[Optional[Tuple[int, int]]]
    name: str = ""
    _index: Dict[Perm, int] = field(default_factory=dict, repr=False)
    _table: Optional[np.ndarray] = field(default=None, repr=False)
    _inverse: List[int] = field(default_factory=list, repr=False)
    _classes: Optional[List[ConjClass]] = field(default=None, repr=False)

    def __post_init__(self):
        self._index = {p: k for k, p in enumerate(self.perms)}
        self._inverse = [self._index[tuple(np.argsort(p).tolist())] for p in self.perms]
        if self.order <= settings.GROUP_TABLE_LIMIT:
            self._table = np.array(
                [[self._index[compose(a, b)] for b in self.perms] for a in self.perms],
                dtype=np.int64,
            )

    @property
    def order(self) -> int:
        return len(self.perms)

    @property
    def identity(self) -> int:
        return 0

    @property
    def labels(self) -> List[str]:
        return [cycle_label(p) for p in self.perms]

    @property
    def generator_ids(self) -> List[int]:
        return [self._index[g] for g in self.generators]

    @property
    def table(self) -> Optional[np.ndarray]:
        return self._table

    def mul(self, a: int, b: int) -> int:
        if self._table is not None:
            return int(self._table[a, b])
        return self._index[compose(self.perms[a], self.perms[b])]

    def inv(self, a: int) -> int:
        return self._inverse[a]

    def conjugate(self, g: int, h: int) -> int:
        """g h g^{-1}."""
        return self.mul(self.mul(g, h), self.inv(g))

    def element(self, label: str) -> int:
        """Element id from a cycle-notation label."""
        perm = parse_permutation(label, self.degree)
        if perm not in self._index:
            raise ConfigurationError("element", f"{label} is not in the group {self.name or ''}")
        return self._index[perm]

    def label(self, g: int) -> str:
        return cycle_label(self.perms[g])

    def index_of(self, perm: Perm) -> int:
        return self._index[perm]

    def is_central(self, h: int) -> bool:
        return all(self.mul(g, h) == self.mul(h, g) for g in range(self.order))

    def conjugacy_classes(self) -> List[ConjClass]:
        """Orbits of the conjugation action, ordered by smallest member."""
        if self._classes is None:
            seen = [False] * self.order
            classes: List[ConjClass] = []
            for h in range(self.order):
                if seen[h]:
                    continue
                members = sorted({self.conjugate(g, h) for g in range(self.order)})
                for m in members:
                    seen[m] = True
                classes.append(ConjClass(representative=members[0], members=tuple(members)))
            self._classes = classes
        return self._classes

    def class_index(self, h: int) -> int:
        for k, c in enumerate(self.conjugacy_classes()):
            if h in c.members:
                return k
        raise ValueError(f"element {h} outside the group")

    def axioms_hold(self, seed: int = 0) -> bool:
        """Associativity, identity and inverses of the table.

        Exhaustive up to order 1000 (vectorised over one index), sampled above.
        """
        n = self.order
        if any(self.mul(0, a) != a or self.mul(a, 0) != a for a in range(n)):
            return False
        if any(self.mul(a, self.inv(a)) != 0 for a in range(n)):
            return False
        if self._table is not None and n <= 1000:
            t = self._table
            for a in range(n):
                if not np.array_equal(t[t[a], :], t[a][t]):
                    return False
            return True
        rng = np.random.default_rng(seed)
        for a, b, c in rng.integers(0, n, size=(settings.GROUP_SPOT_CHECKS, 3)):
            a, b, c = int(a), int(b), int(c)
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                return False
        return True

    def class_sum_is_central(self, k: int) -> bool:
        """Class sums commute with every group element in the group algebra."""
        members = set(self.conjugacy_classes()[k].members)
        return all(
            sorted(self.mul(g, m) for m in members) == sorted(self.mul(m, g) for m in members)
            for g in range(self.order)
        )


def group_from_generators(perms: Sequence[Perm], degree: int, cap: Optional[int] = None, name: str = "") -> FinGroup:
    """BFS closure of permutation generators; raises GroupOverflowError past the cap."""
    cap = cap or settings.MAX_GROUP_ORDER
    generators = [tuple(p) for p in perms]
    identity = tuple(range(degree))
    index = {identity: 0}
    elements: List[Perm] = [identity]
    parents: List[Optional[Tuple[int, int]]] = [None]
    queue = deque([0])
    while queue:
        g = queue.popleft()
        for position, s in enumerate(generators):
            new = compose(elements[g], s)
            if new in index:
                continue
            if len(elements) >= cap:
                raise GroupOverflowError(cap)
            index[new] = len(elements)
            elements.append(new)
            parents.append((g, position))
            queue.append(index[new])
    logger.debug(f"Generated group {name or '?'} of order {len(elements)} on {degree} points")
    return FinGroup(degree=degree, perms=elements, generators=generators, parents=parents, name=name)


def symmetric_group(n: int, cap: Optional[int] = None) -> FinGroup:
    """S_n generated by the adjacent transpositions (i i+1)."""
    gens = []
    for i in range(n - 1):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(tuple(p))
    return group_from_generators(gens, max(n, 1), cap, name=f"S{n}")


def cyclic_group(n: int, cap: Optional[int] = None) -> FinGroup:
    """C_n generated by the n-cycle (1 2 ... n)."""
    gens = [tuple((i + 1) % n for i in range(n))] if n > 1 else []
    return group_from_generators(gens, max(n, 1), cap, name=f"C{n}")


def dihedral_group(n: int, cap: Optional[int] = None) -> FinGroup:
    """Symmetries of the n-gon: rotation (1 2 ... n) and the reflection i -> n+1-i."""
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((n - 1 - i) for i in range(n))
    return group_from_generators([rotation, reflection], n, cap, name=f"D{n}")


def trivial_group() -> FinGroup:
    return group_from_generators([], 1, name="1")
