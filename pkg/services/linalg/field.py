from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Union

import sympy
from sympy import GF, QQ
from sympy.polys.domains import Domain

from core.exceptions import ConfigurationError, FieldMismatchError

Scalar = Any
ScalarInput = Union[int, str, Fraction, sympy.Rational, Scalar]


class FieldKind(str, Enum):
    RATIONALS = "rationals"
    PRIME = "prime"


@lru_cache(maxsize=None)
def _domain(characteristic: int) -> Domain:
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: the rationals (characteristic 0) or GF(p).

    Attributes:
        characteristic: 0 for the rationals, a prime p otherwise
    """
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic < 0 or (
            self.characteristic != 0 and not sympy.isprime(self.characteristic)
        ):
            raise ConfigurationError("field", f"{self.characteristic} is neither 0 nor a prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @property
    def kind(self) -> FieldKind:
        return FieldKind.RATIONALS if self.characteristic == 0 else FieldKind.PRIME

    @property
    def domain(self) -> Domain:
        return _domain(self.characteristic)

    @property
    def label(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def element(self, value: ScalarInput) -> Scalar:
        """Convert an int, fraction, "a/b" string or sympy number into the field."""
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, str, Fraction)) or isinstance(value, sympy.Basic):
            rational = sympy.Rational(value) if not isinstance(value, Fraction) else sympy.Rational(value.numerator, value.denominator)
            return self._from_rational(int(rational.p), int(rational.q))
        if self.domain.of_type(value):
            return value
        raise FieldMismatchError(type(value).__name__, self.label, "element conversion")

    def _from_rational(self, numerator: int, denominator: int) -> Scalar:
        domain = self.domain
        if self.characteristic == 0:
            return domain(numerator, denominator)
        if denominator % self.characteristic == 0:
            raise FieldMismatchError(f"{numerator}/{denominator}", self.label, "reduction mod p")
        return domain.quo(domain(numerator), domain(denominator))

    def reduce_from(self, other: "FieldSpec", value: Scalar) -> Scalar:
        """Map an element of `other` into this field (identity or reduction mod p)."""
        if other == self:
            return value
        if other.characteristic != 0:
            raise FieldMismatchError(other.label, self.label, "field conversion")
        rational = other.domain.to_sympy(value)
        return self._from_rational(int(rational.p), int(rational.q))

    def to_sympy(self, value: Scalar) -> sympy.Rational:
        return self.domain.to_sympy(value)

    def to_json(self, value: Scalar) -> Union[int, str]:
        number = self.to_sympy(value)
        if number.q == 1:
            return int(number.p)
        return f"{number.p}/{number.q}"

    def is_zero(self, value: Scalar) -> bool:
        return not value

    def __str__(self) -> str:
        return self.label


def same_field(left: FieldSpec, right: FieldSpec, operation: str) -> FieldSpec:
    if left != right:
        raise FieldMismatchError(left.label, right.label, operation)
    return left
