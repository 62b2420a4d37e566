"""Exact scalars: rationals and products ``c * sqrt(r)`` with rational c, r.

Dilations by ``t**(1/2)`` for rational ``t`` only ever produce numbers of the
second kind, so keeping them symbolic lets the Hermite and measure
bookkeeping stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


def to_fraction(value) -> Fraction:
    """Parse ints, Fractions and ``"num/den"`` strings into a Fraction.

    Floats are rejected on purpose: silently rationalising ``0.1`` would
    smuggle binary rounding into exact computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _isqrt_exact(n: int):
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q: Fraction):
    """Return the exact square root of ``q`` if it is rational, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = _isqrt_exact(q.numerator), _isqrt_exact(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


@dataclass(frozen=True)
class SqrtRational:
    """The real number ``coef * sqrt(radicand)`` with rational parts."""

    coef: Fraction
    radicand: Fraction = Fraction(1)

    def __post_init__(self):
        coef = Fraction(self.coef)
        rad = Fraction(self.radicand)
        if rad < 0:
            raise ValueError("negative radicand")
        if coef == 0 or rad == 0:
            coef, rad = Fraction(0), Fraction(1)
        else:
            root = rational_sqrt(rad)
            if root is not None:
                coef, rad = coef * root, Fraction(1)
            else:
                # pull the square part of numerator and denominator outwards
                num, den = rad.numerator, rad.denominator
                rad_num, out_num = _split_square(num)
                rad_den, out_den = _split_square(den)
                coef = coef * Fraction(out_num, out_den * rad_den)
                rad = Fraction(rad_num * rad_den)
        object.__setattr__(self, "coef", coef)
        object.__setattr__(self, "radicand", rad)

    @classmethod
    def sqrt(cls, q) -> "SqrtRational":
        return cls(Fraction(1), to_fraction(q))

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.coef

    def exact_or_float(self):
        return self.coef if self.is_rational else float(self)

    def __float__(self):
        return float(self.coef) * math.sqrt(self.radicand)

    def __mul__(self, other):
        if isinstance(other, SqrtRational):
            return SqrtRational(self.coef * other.coef, self.radicand * other.radicand)
        if is_exact(other):
            return SqrtRational(self.coef * other, self.radicand)
        return float(self) * other

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SqrtRational):
            return self * other.inverse()
        if is_exact(other):
            return SqrtRational(self.coef / other, self.radicand)
        return float(self) / other

    def inverse(self) -> "SqrtRational":
        # 1/(c sqrt r) = sqrt(r) / (c r)
        return SqrtRational(1 / (self.coef * self.radicand), self.radicand)

    def __pow__(self, n: int) -> "SqrtRational":
        if n < 0:
            return self.inverse() ** (-n)
        coef = self.coef ** n * self.radicand ** (n // 2)
        return SqrtRational(coef, self.radicand if n % 2 else 1)

    def __neg__(self):
        return SqrtRational(-self.coef, self.radicand)

    def __eq__(self, other):
        if isinstance(other, SqrtRational):
            return self.coef == other.coef and self.radicand == other.radicand
        if is_exact(other):
            return self.is_rational and self.coef == other
        return NotImplemented

    def __hash__(self):
        return hash((self.coef, self.radicand))

    def __repr__(self):
        if self.is_rational:
            return f"SqrtRational({self.coef})"
        return f"SqrtRational({self.coef}*sqrt({self.radicand}))"


def _split_square(n: int):
    """Write n = rest * out**2 with ``rest`` free of small square factors."""
    out = 1
    p = 2
    while p * p <= n and p < 10_000:
        while n % (p * p) == 0:
            n //= p * p
            out *= p
        p += 1
    return n, out


def rational_power(base, exponent):
    """``base ** exponent`` exactly when possible.

    Returns a SqrtRational when ``base`` is rational and ``2 * exponent`` is an
    integer; otherwise a float.
    """
    if is_exact(base) and is_exact(exponent):
        base, exponent = Fraction(base), Fraction(exponent)
        if (2 * exponent).denominator == 1 and base > 0:
            twice = int(2 * exponent)
            return SqrtRational.sqrt(base) ** twice
    return float(base) ** float(exponent)


def as_number(value):
    """Collapse a SqrtRational to Fraction when rational, else to float."""
    if isinstance(value, SqrtRational):
        return value.exact_or_float()
    return value


def format_scalar(value) -> str:
    """Serialise a scalar: rationals as ``num/den``, floats with 17 digits."""
    if isinstance(value, SqrtRational):
        value = value.exact_or_float()
    if isinstance(value, bool):
        return str(value).lower()
    if is_exact(value):
        f = Fraction(value)
        return f"{f.numerator}/{f.denominator}"
    return format(float(value), ".17g")
