"""Coefficient domains: exact rationals and prime fields.

Rational elements are `fractions.Fraction` (always reduced, positive
denominator); prime-field elements are plain ints in ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for any modulus we will ever see."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of exact rationals."""

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def modulus(self):
        return None

    def convert(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def from_literal(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def inv(self, a):
        return 1 / Fraction(a)

    def is_negative(self, a) -> bool:
        return a < 0

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField:
    """The field with a prime number of elements; values are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"modulus {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def modulus(self) -> int:
        return self.p

    def convert(self, x) -> int:
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.from_literal(x.numerator, x.denominator)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def from_literal(self, num: int, den: int) -> int:
        if den % self.p == 0:
            raise InputError(
                f"denominator {den} is divisible by the modulus {self.p}"
            )
        return num * pow(den, self.p - 2, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        return pow(a, self.p - 2, self.p)

    def is_negative(self, a) -> bool:
        return False

    def to_str(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()
DEFAULT_PRIME = 32003
