"""Polynomials in even variables x^1..x^n and Grassmann variables theta_1..theta_n.

A monomial is stored as an exponent tuple ``(a_1, ..., a_n, b_1, ..., b_n)``
with ``b_i`` in {0, 1}; odd factors are kept in the canonical order
theta_1 theta_2 ... theta_n.  Odd derivatives act from the left.
"""

from fractions import Fraction
from itertools import combinations

from .errors import InvalidFamily, ParityError

__all__ = [
    "SuperPolynomial",
    "buttin_bracket",
    "poisson_bracket",
    "odd_laplacian",
    "default_names",
]


def _odd_sign(b, i):
    # sign of moving theta_i to the front
    return -1 if sum(b[:i]) % 2 else 1


def _mul_mono(e1, e2, n):
    b1, b2 = e1[n:], e2[n:]
    sign = 1
    for i in range(n):
        if b2[i]:
            if b1[i]:
                return 0, None
            # theta_i from the right factor passes the odd variables of the
            # left factor with larger index
            if sum(b1[i + 1:]) % 2:
                sign = -sign
    a = tuple(x + y for x, y in zip(e1[:n], e2[:n]))
    b = tuple(x + y for x, y in zip(b1, b2))
    return sign, a + b


def default_names(n):
    if n == 2:
        return ("x", "y", "theta", "psi")
    return tuple([f"x{i + 1}" for i in range(n)] + [f"th{i + 1}" for i in range(n)])


class SuperPolynomial:
    """Sparse super polynomial with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != 2 * n:
                    raise ValueError(f"exponent {e} has wrong length for n={n}")
                if any(x not in (0, 1) for x in e[n:]):
                    raise ValueError(f"odd exponents must be 0 or 1: {e}")
                if any(x < 0 for x in e[:n]):
                    raise ValueError(f"negative exponent: {e}")
                c = Fraction(c)
                if c:
                    self.terms[e] = self.terms.get(e, 0) + c
                    if not self.terms[e]:
                        del self.terms[e]

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {(0,) * (2 * n): 1})

    @classmethod
    def even_var(cls, n, i):
        e = [0] * (2 * n)
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def odd_var(cls, n, i):
        e = [0] * (2 * n)
        e[n + i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def parse(cls, text, names=None):
        """Parse expressions like ``"y*psi - 1/2*x^2*theta"``.

        ``names`` lists the even variables followed by the odd ones, or is
        the number n of variable pairs; the default for n=2 is ``x y theta psi``.
        """
        if names is None:
            names = 2
        if isinstance(names, int):
            names = default_names(names)
        n = len(names) // 2
        index = {name: i for i, name in enumerate(names)}
        text = text.replace(" ", "").replace("-", "+-")
        result = cls.zero(n)
        for chunk in text.split("+"):
            if not chunk:
                continue
            sign = 1
            while chunk.startswith("-"):
                sign, chunk = -sign, chunk[1:]
            term = cls(n, {(0,) * (2 * n): sign})
            for factor in chunk.split("*"):
                if factor in index or factor.split("^")[0] in index:
                    name, _, power = factor.partition("^")
                    i = index[name]
                    var = cls.even_var(n, i) if i < n else cls.odd_var(n, i - n)
                    for _ in range(int(power or 1)):
                        term = term * var
                else:
                    term = term * Fraction(factor)
            result = result + term
        return result

    # -- structure ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPolynomial(self.n, {(0,) * (2 * self.n): other})
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def parities(self):
        return {sum(e[self.n:]) % 2 for e in self.terms}

    @property
    def parity(self):
        """Parity of a homogeneous polynomial (0 for the zero polynomial)."""
        ps = self.parities()
        if len(ps) > 1:
            raise ParityError("polynomial has mixed parity")
        return ps.pop() if ps else 0

    def grades(self):
        n = self.n
        return {sum(e[:n]) - sum(e[n:]) for e in self.terms}

    @property
    def grade(self):
        gs = self.grades()
        if len(gs) > 1:
            raise ValueError("polynomial is not grade-homogeneous")
        return gs.pop() if gs else 0

    def constant_term(self):
        return self.terms.get((0,) * (2 * self.n), Fraction(0))

    def without_constant(self):
        out = SuperPolynomial(self.n)
        out.terms = {e: c for e, c in self.terms.items() if any(e)}
        return out

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if self.n != other.n:
            raise ValueError("polynomials live in different variable sets")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperPolynomial(self.n, {(0,) * (2 * self.n): other})
        self._check(other)
        out = SuperPolynomial(self.n)
        out.terms = dict(self.terms)
        for e, c in other.terms.items():
            v = out.terms.get(e, 0) + c
            if v:
                out.terms[e] = v
            else:
                out.terms.pop(e, None)
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SuperPolynomial(self.n)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            out = SuperPolynomial(self.n)
            if other:
                out.terms = {e: c * other for e, c in self.terms.items()}
            return out
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        self._check(other)
        n = self.n
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                s, e = _mul_mono(e1, e2, n)
                if s:
                    acc[e] = acc.get(e, 0) + s * c1 * c2
        out = SuperPolynomial(n)
        out.terms = {e: c for e, c in acc.items() if c}
        return out

    def __rmul__(self, other):
        return self * other

    # -- derivatives --------------------------------------------------------
    def d_even(self, i):
        n = self.n
        acc = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                acc[tuple(f)] = acc.get(tuple(f), 0) + c * e[i]
        out = SuperPolynomial(n)
        out.terms = {e: c for e, c in acc.items() if c}
        return out

    def d_odd(self, i):
        """Left derivative with respect to theta_i."""
        n = self.n
        out = SuperPolynomial(n)
        for e, c in self.terms.items():
            b = e[n:]
            if b[i]:
                f = list(e)
                f[n + i] = 0
                out.terms[tuple(f)] = c * _odd_sign(b, i)
        return out

    # -- display ------------------------------------------------------------
    def to_string(self, names=None):
        n = self.n
        if names is None:
            names = default_names(n)
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_display_key):
            c = self.terms[e]
            factors = []
            for i in range(n):
                if e[i] == 1:
                    factors.append(names[i])
                elif e[i] > 1:
                    factors.append(f"{names[i]}^{e[i]}")
            factors += [names[n + i] for i in range(n) if e[n + i]]
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self):
        return f"SuperPolynomial({self.to_string()!r})"


def _display_key(e):
    n = len(e) // 2
    return (sum(e[:n]), tuple(-x for x in e[:n]), e[n:])


def buttin_bracket(f, g):
    """Odd Poisson bracket sum_i df/dx^i dg/dtheta_i + (-1)^p(f) df/dtheta_i dg/dx^i."""
    f.parity, g.parity  # reject mixed parity early
    pf = f.parity
    sgn = -1 if pf else 1
    out = SuperPolynomial.zero(f.n)
    for i in range(f.n):
        out = out + f.d_even(i) * g.d_odd(i)
        out = out + (f.d_odd(i) * g.d_even(i)) * sgn
    return out


def poisson_bracket(f, g):
    """Classical bracket pairing (x^1, x^2), (x^3, x^4), ... as (q, p)."""
    for h in (f, g):
        if any(any(e[h.n:]) for e in h.terms):
            raise InvalidFamily("Poisson bracket takes purely even polynomials")
    if f.n % 2:
        raise InvalidFamily("Poisson bracket needs an even number of even variables")
    out = SuperPolynomial.zero(f.n)
    for i in range(0, f.n, 2):
        out = out + f.d_even(i) * g.d_even(i + 1) - f.d_even(i + 1) * g.d_even(i)
    return out


def odd_laplacian(f):
    out = SuperPolynomial.zero(f.n)
    for i in range(f.n):
        out = out + f.d_odd(i).d_even(i)
    return out


def monomials(n, even_degree, odd_degree):
    """All exponent tuples with the given even and odd total degree."""
    result = []

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    for a in compositions(even_degree, n):
        for odd in combinations(range(n), odd_degree):
            b = tuple(1 if i in odd else 0 for i in range(n))
            result.append(a + b)
    return result
