"""Exact complex-rational coefficients and their polynomial extension in hbar."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Mapping, Union

Scalar = Union[int, Fraction, "ComplexRational"]


def _to_fraction(value: int | Fraction | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class ComplexRational:
    """A complex number with exact rational real and imaginary parts."""
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _to_fraction(self.re))
        object.__setattr__(self, "im", _to_fraction(self.im))

    @classmethod
    def coerce(cls, value: Scalar) -> ComplexRational:
        if isinstance(value, ComplexRational):
            return value
        return cls(_to_fraction(value))

    @classmethod
    def i(cls) -> ComplexRational:
        return cls(Fraction(0), Fraction(1))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> ComplexRational:
        return ComplexRational(self.re, -self.im)

    def __add__(self, other: Scalar) -> ComplexRational:
        other = ComplexRational.coerce(other)
        return ComplexRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> ComplexRational:
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other: Scalar) -> ComplexRational:
        return self + (-ComplexRational.coerce(other))

    def __rsub__(self, other: Scalar) -> ComplexRational:
        return ComplexRational.coerce(other) - self

    def __mul__(self, other: Scalar) -> ComplexRational:
        other = ComplexRational.coerce(other)
        return ComplexRational(self.re * other.re - self.im * other.im,
                               self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ComplexRational:
        if exponent < 0:
            raise ValueError("Negative powers are not supported")
        result = ComplexRational(Fraction(1))
        for _ in range(exponent):
            result = result * self
        return result

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        magnitude = abs(self.im)
        imaginary = "i" if magnitude == 1 else f"{magnitude}*i"
        return f"{self.re}{sign}{imaginary}"


ZERO = ComplexRational()
ONE = ComplexRational(Fraction(1))
I = ComplexRational.i()

# (-i)^k for k mod 4, used by every contraction in the normal-ordering rule.
MINUS_I_POWERS = (ONE, -I, -ONE, I)


@dataclass(frozen=True)
class HbarCoefficient:
    """Polynomial in hbar with complex-rational coefficients.

    Zero coefficients are never stored, so equality of two coefficients is equality of their
    term mappings.
    """
    terms: Mapping[int, ComplexRational]

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        cleaned = {}
        for power, value in (terms or {}).items():
            if power < 0:
                raise ValueError(f"Negative hbar power {power}")
            value = ComplexRational.coerce(value)
            if not value.is_zero():
                cleaned[int(power)] = value
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(cleaned.items()))))

    @classmethod
    def constant(cls, value: Scalar) -> HbarCoefficient:
        return cls({0: value})

    @classmethod
    def hbar(cls, power: int = 1, value: Scalar = 1) -> HbarCoefficient:
        return cls({power: value})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HbarCoefficient):
            return dict(self.terms) == dict(other.terms)
        if isinstance(other, (int, Fraction, ComplexRational)):
            return self == HbarCoefficient.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def max_power(self) -> int:
        return max(self.terms, default=0)

    def component(self, power: int) -> ComplexRational:
        return self.terms.get(power, ZERO)

    def __add__(self, other: HbarCoefficient | Scalar) -> HbarCoefficient:
        other = _coerce_coefficient(other)
        merged = dict(self.terms)
        for power, value in other.terms.items():
            merged[power] = merged.get(power, ZERO) + value
        return HbarCoefficient(merged)

    __radd__ = __add__

    def __neg__(self) -> HbarCoefficient:
        return HbarCoefficient({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: HbarCoefficient | Scalar) -> HbarCoefficient:
        return self + (-_coerce_coefficient(other))

    def __mul__(self, other: HbarCoefficient | Scalar) -> HbarCoefficient:
        other = _coerce_coefficient(other)
        product: dict[int, ComplexRational] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                product[k1 + k2] = product.get(k1 + k2, ZERO) + v1 * v2
        return HbarCoefficient(product)

    __rmul__ = __mul__

    def conjugate(self) -> HbarCoefficient:
        """Complex conjugation; hbar is real."""
        return HbarCoefficient({k: v.conjugate() for k, v in self.terms.items()})

    def evaluate(self, value: int | Fraction) -> ComplexRational:
        value = _to_fraction(value)
        total = ZERO
        for power, coefficient in self.terms.items():
            total = total + coefficient * (value ** power)
        return total

    def truncate(self, max_power: int) -> HbarCoefficient:
        return HbarCoefficient({k: v for k, v in self.terms.items() if k <= max_power})

    def shift(self, delta: int) -> HbarCoefficient:
        """Multiply by hbar**delta. Negative shifts require the low powers to vanish."""
        if self.terms and min(self.terms) + delta < 0:
            raise ValueError(f"Cannot shift hbar powers by {delta}: lowest power is {min(self.terms)}")
        return HbarCoefficient({k + delta: v for k, v in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for power, value in self.terms.items():
            suffix = "" if power == 0 else "*hbar" if power == 1 else f"*hbar^{power}"
            parts.append(f"({value}){suffix}")
        return " + ".join(parts)


def _coerce_coefficient(value: HbarCoefficient | Scalar) -> HbarCoefficient:
    if isinstance(value, HbarCoefficient):
        return value
    return HbarCoefficient.constant(value)
