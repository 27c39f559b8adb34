"""Exact coefficient fields: prime fields F_p and the rationals.

Scalars are plain Python values (ints in [0, p) for a prime field,
`fractions.Fraction` for the rationals), kept in canonical form so that
equality is structural.  A Field object bundles the arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


class FieldError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """F_p with elements stored as least non-negative residues."""

    is_prime = True

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    def of(self, value) -> int:
        """Canonical element from an int, Fraction, or field element."""
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise FieldError(f"denominator divisible by {self.p}")
            return value.numerator % self.p * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def zero(self):
        return 0

    def one(self):
        return 1

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def to_str(self, a) -> str:
        # symmetric representative keeps printed matrices readable (-1 not p-1)
        a %= self.p
        return str(a - self.p) if a > self.p // 2 else str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """Q with elements stored as reduced Fractions."""

    is_prime = False
    p = 0

    def of(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "RationalField()"


def field_from_spec(spec: str):
    """Parse a field spec string: 'rational' or 'prime <p>' (or 'prime')."""
    parts = spec.split()
    if parts == ["rational"]:
        return RationalField()
    if parts and parts[0] == "prime":
        if len(parts) == 1:
            return PrimeField()
        if len(parts) == 2 and parts[1].isdigit():
            return PrimeField(int(parts[1]))
    raise FieldError(f"bad field spec: {spec!r}")
