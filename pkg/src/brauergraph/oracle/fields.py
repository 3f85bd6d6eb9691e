"""Exact coefficient fields for the oracle: rationals and prime fields.

A field object carries the arithmetic; elements are plain Fractions or
plain ints, which keeps the dense row reduction fast.  No floating point
exists anywhere in the oracle.
"""
from __future__ import annotations

from fractions import Fraction


class Rationals:
    name = "Q"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def from_fraction(q: Fraction):
        return Fraction(q)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_fraction(self, q: Fraction):
        num, den = q.numerator, q.denominator
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes modulo {self.p}")
        return (num % self.p) * self.inv(den % self.p) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0


QQ = Rationals()


def field_from_spec(spec: str):
    """Parse a field request: ``q`` for rationals, ``fp:<p>`` for a prime field."""
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        return PrimeField(int(spec[3:]))
    raise ValueError(f"unknown field spec {spec!r}; use 'q' or 'fp:<p>'")
