"""Tensor-leg bookkeeping.

Words are tuples of basis indices; the flat index of a word is its
mixed-radix value with the leftmost letter most significant.
"""
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from core.config import settings
from core.exceptions import MatrixSizeExceededError
from .field import FieldSpec
from .matrix import Matrix, kron_all

Word = Tuple[int, ...]


def flat_index(word: Sequence[int], radices: Sequence[int]) -> int:
    index = 0
    for letter, radix in zip(word, radices):
        index = index * radix + letter
    return index


def word_of(index: int, radices: Sequence[int]) -> Word:
    letters: List[int] = []
    for radix in reversed(radices):
        index, letter = divmod(index, radix)
        letters.append(letter)
    return tuple(reversed(letters))


def word_index(word: Sequence[int], dim: int) -> int:
    return flat_index(word, [dim] * len(word))


def index_word(index: int, length: int, dim: int) -> Word:
    return word_of(index, [dim] * length)


def words(length: int, dim: int) -> Iterator[Word]:
    """All words of the given length in flat-index order."""
    return product(range(dim), repeat=length)


def ensure_size(columns: int, what: str) -> None:
    if columns > settings.MAX_MATRIX_DIM:
        raise MatrixSizeExceededError(columns, settings.MAX_MATRIX_DIM, what)


def tensor_power(m: Matrix, n: int) -> Matrix:
    if n == 0:
        return Matrix.identity(1, m.field)
    return kron_all([m] * n)


def on_legs(op: Matrix, dim: int, left: int, right: int) -> Matrix:
    """id^{left} (x) op (x) id^{right} for op acting on some legs of V^{(x)k}."""
    field = op.field
    factors = []
    if left:
        factors.append(Matrix.identity(dim ** left, field))
    factors.append(op)
    if right:
        factors.append(Matrix.identity(dim ** right, field))
    return kron_all(factors)


def flip(dim_left: int, dim_right: int, field: FieldSpec) -> Matrix:
    """The flip X (x) Y -> Y (x) X."""
    images = [0] * (dim_left * dim_right)
    for a in range(dim_left):
        for b in range(dim_right):
            images[a * dim_right + b] = b * dim_left + a
    return Matrix.permutation(images, field)


def leg_permutation(perm: Sequence[int], dim: int, field: FieldSpec) -> Matrix:
    """Permutation of tensor legs: the letter in position i moves to position perm[i]."""
    n = len(perm)
    images = []
    for word in words(n, dim):
        target = [0] * n
        for i, letter in enumerate(word):
            target[perm[i]] = letter
        images.append(word_index(target, dim))
    return Matrix.permutation(images, field)
