"""Exact coefficient fields: the rationals and word-sized prime fields.

Rational elements are ``fractions.Fraction`` values; prime-field elements
are plain ints in ``[0, p)``.  All polynomial code goes through the field
object for arithmetic so the two representations interoperate nowhere.
"""
from __future__ import annotations

from fractions import Fraction

# Witnesses sufficient for deterministic Miller-Rabin below 2^64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of rational numbers with arbitrary-precision arithmetic."""

    kind = "Q"
    __slots__ = ()

    zero = Fraction(0)
    one = Fraction(1)

    def normalize(self, a):
        return a if type(a) is Fraction else Fraction(a)

    def from_int(self, n: int):
        return Fraction(n)

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
    def div(a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    @staticmethod
    def inv(a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def random_element(self, rng, nonzero=False):
        while True:
            c = Fraction(rng.randrange(-20, 21))
            if c or not nonzero:
                return c

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("canonlab.Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """Integers modulo a machine-word prime p."""

    kind = "Fp"
    __slots__ = ("p", "zero", "one")

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"modulus {p!r} is not prime")
        if p.bit_length() > 63:
            raise ValueError(f"modulus {p} does not fit in a machine word")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def normalize(self, a):
        if type(a) is Fraction:
            return self.div(a.numerator % self.p, a.denominator % self.p)
        return a % self.p

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def random_element(self, rng, nonzero=False):
        return rng.randrange(1 if nonzero else 0, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("canonlab.Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

#: Default prime for finite-field sampling experiments.
DEFAULT_PRIME = 32003


def GF(p: int) -> PrimeField:
    return PrimeField(p)
