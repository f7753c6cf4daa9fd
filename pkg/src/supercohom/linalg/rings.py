"""Coefficient rings: the rationals, the integers and prime fields F_p.

Elements are plain Python numbers: ``Fraction`` over Q, ``int`` over Z and
``int`` in the symmetric range ``[-(p-1)/2, (p-1)/2]`` over F_p.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PrimeSkip

__all__ = ["Ring", "QQ", "ZZ", "GF", "symmetric", "phi_p", "is_prime"]


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def symmetric(x, p):
    x %= p
    return x - p if x > p // 2 else x


def phi_p(x, p):
    """Reduce an integer or rational modulo p (symmetric representative)."""
    if isinstance(x, Fraction):
        den = x.denominator % p
        if den == 0:
            raise PrimeSkip(p)
        return symmetric(x.numerator * pow(den, -1, p), p)
    return symmetric(x, p)


@dataclass(frozen=True)
class Ring:
    kind: str  # "Q", "Z" or "Fp"
    p: int = 0

    @property
    def is_field(self):
        return self.kind != "Z"

    def __str__(self):
        return f"F_{self.p}" if self.kind == "Fp" else self.kind

    def convert(self, x):
        if self.kind == "Q":
            return Fraction(x)
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        return phi_p(x, self.p)

    def add(self, a, b):
        return symmetric(a + b, self.p) if self.kind == "Fp" else a + b

    def mul(self, a, b):
        return symmetric(a * b, self.p) if self.kind == "Fp" else a * b

    def inv(self, a):
        if self.kind == "Q":
            return 1 / Fraction(a)
        if self.kind == "Fp":
            return symmetric(pow(a, -1, self.p), self.p)
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in Z")

    def normalize(self, a):
        return symmetric(a, self.p) if self.kind == "Fp" else a


QQ = Ring("Q")
ZZ = Ring("Z")


def GF(p):
    if p != 2 and not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return Ring("Fp", p)
