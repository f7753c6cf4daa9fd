"""Bridges between residues and exact values: CRT and rational reconstruction."""

from fractions import Fraction
from math import gcd, isqrt

from ..errors import ModuliError
from .rings import symmetric

__all__ = ["crt_combine", "rational_reconstruction"]


def crt_combine(residues):
    """Combine ``[(value, modulus), ...]`` into ``(value, product)``.

    The value is returned in the symmetric range around zero.
    """
    residues = list(residues)
    if not residues:
        raise ValueError("no residues")
    x, m = 0, 1
    for v, n in residues:
        if n < 1:
            raise ModuliError(f"bad modulus {n}")
        if gcd(m, n) != 1:
            raise ModuliError(f"moduli {m} and {n} are not coprime")
        # x + m*t == v (mod n)
        t = ((v - x) * pow(m, -1, n)) % n if n > 1 else 0
        x, m = x + m * t, m * n
    return symmetric(x, m) if m > 2 else x % m, m


def rational_reconstruction(residue, modulus):
    """Find n/d with |n|, d <= sqrt(modulus/2) and n == d*residue (mod modulus).

    Returns a Fraction, or None when no such fraction exists.
    """
    if modulus < 2:
        raise ValueError("modulus must exceed 1")
    bound = isqrt(modulus // 2)
    r0, r1 = modulus, residue % modulus
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0 or abs(t1) > bound or gcd(abs(t1), modulus) != 1:
        return None
    value = Fraction(r1, t1)
    if (value.numerator - value.denominator * residue) % modulus:
        return None
    return value
