"""Cochains with trivial coefficients and the Chevalley-Eilenberg differential.

A k-cochain monomial is a non-decreasing tuple of element indices; repeats
are allowed only for odd elements.  Cochains live in the free
super-commutative algebra on the duals xi^i, where xi^i has degree 1 and the
parity of e_i, and

    xi^a xi^b = -(-1)^{p_a p_b} xi^b xi^a.

Repeated odd duals use the divided-power basis: the monomial ``(i, i)``
stands for (xi^i)^2 / 2.  That is the basis dual to the elements, so
differentials of integral algebras stay integral.
"""

from fractions import Fraction
from math import comb

from .errors import AdmissibilityError, WindowError

__all__ = [
    "CochainComplex",
    "Cochain",
    "complex_of",
    "monomial_grade",
    "is_admissible",
    "enumerate_monomials",
    "differential",
    "image_monomials",
    "inverse_image_monomials",
    "multiply_monomials",
    "format_monomial",
]


def format_monomial(alg, m, module_index=0):
    inner = ",".join(alg.label(i) for i in m)
    return f"c({inner})"


class CochainComplex:
    """Chevalley-Eilenberg complex of a superalgebra, with memoized differentials.

    Immutable apart from its caches; one instance per algebra is shared via
    :func:`complex_of`.
    """

    def __init__(self, alg):
        self.alg = alg
        self.parities = alg.parities
        self.grades = alg.grades
        self._d_cache = {}
        self._pairs = self._normalized_pairs()
        self._dxi = self._generator_differentials()

    # -- structure ----------------------------------------------------------
    def _normalized_pairs(self):
        """Brackets keyed by ``(a, b)`` with ``a <= b``."""
        out = {}
        par = self.parities
        for (i, j), terms in self.alg.table.forward.items():
            if i <= j:
                out.setdefault((i, j), dict(terms))
            elif (j, i) not in self.alg.table.forward:
                s = 1 if par[i] and par[j] else -1
                out[(j, i)] = {k: s * c for k, c in terms}
        return out

    def _generator_differentials(self):
        # d xi^c = - sum_{a<=b} c^c_{ab} xi^a xi^b   (divided square if a == b),
        # i.e. (d xi^c)(e_a, e_b) = -xi^c([e_a, e_b])
        dxi = {}
        for (a, b), terms in self._pairs.items():
            for c, coef in terms.items():
                coef = -coef
                if coef.denominator == 1:
                    coef = coef.numerator  # int arithmetic is much cheaper
                dxi.setdefault(c, []).append(((a, b), coef))
        return {c: tuple(v) for c, v in dxi.items()}

    # -- monomials ----------------------------------------------------------
    def grade(self, m):
        g = self.grades
        return sum(g[i] for i in m)

    def is_admissible(self, m):
        n = len(self.grades)
        for t, i in enumerate(m):
            if not 0 <= i < n:
                return False
            if t and (m[t - 1] > i or (m[t - 1] == i and not self.parities[i])):
                return False
        return True

    def multiply(self, A, B):
        """Product of two monomials: ``(coefficient, monomial)`` or ``(0, None)``."""
        if not A:
            return 1, B
        if not B:
            return 1, A
        par = self.parities
        exp = 0
        for a in A:
            pa = par[a]
            for b in B:
                if a > b:
                    exp += 1 + (pa & par[b])
                elif a == b and not pa:
                    return 0, None
        coef = -1 if exp & 1 else 1
        merged = tuple(sorted(A + B))
        if len(set(merged)) != len(merged):
            ca, cb = {}, {}
            for a in A:
                ca[a] = ca.get(a, 0) + 1
            for b in B:
                cb[b] = cb.get(b, 0) + 1
            for i, na in ca.items():
                nb = cb.get(i)
                if nb:
                    coef *= comb(na + nb, na)
        return coef, merged

    def check_window(self, k, g):
        """Raise WindowError unless every factor of a (k, g)-monomial is generated."""
        if k <= 0:
            return
        alg = self.alg
        lo = alg.lowest_grade
        hi = g - (k - 1) * lo
        if alg.grade_min > lo or (hi >= lo and alg.grade_max < hi):
            raise WindowError(
                f"C^{k}_{g} needs element grades in [{lo}, {hi}], algebra "
                f"{alg.name} covers [{alg.grade_min}, {alg.grade_max}]",
                required=(lo, hi))

    def enumerate(self, k, g):
        """All admissible k-monomials of grade g, in lexicographic order."""
        if k == 0:
            return [()] if g == 0 else []
        self.check_window(k, g)
        grades, par = self.grades, self.parities
        N = len(grades)
        gmax = max(grades) if grades else 0
        gmin = min(grades) if grades else 0
        # the early exit below needs elements in ascending grade order
        ordered = all(a <= b for a, b in zip(grades, grades[1:]))
        out = []
        prefix = []

        def rec(start, left, need):
            if left == 0:
                if need == 0:
                    out.append(tuple(prefix))
                return
            for idx in range(start, N):
                gi = grades[idx]
                if ordered and gi * left > need:
                    break
                if gi + (left - 1) * gmin > need:
                    continue
                if need - gi > (left - 1) * gmax:
                    continue
                prefix.append(idx)
                rec(idx if par[idx] else idx + 1, left - 1, need - gi)
                prefix.pop()

        rec(0, k, g)
        return out

    # -- differential ---------------------------------------------------------
    def _times_pair(self, a, b, m):
        """(xi^a xi^b) * m for a <= b (the divided square when a == b)."""
        par = self.parities
        pa, pb = par[a], par[b]
        if a == b:
            mu = m.count(a)
            coef = (mu + 2) * (mu + 1) // 2
        else:
            ma, mb = m.count(a), m.count(b)
            if (ma and not pa) or (mb and not pb):
                return 0, None
            coef = (ma + 1) * (mb + 1)
        # xi^b moves right past the factors below b, then xi^a past those below a
        exp = 0
        for x in m:
            if x < a:
                exp += 1 + (pa & par[x])
            if x < b:
                exp += 1 + (pb & par[x])
        return (-coef if exp & 1 else coef), tuple(sorted(m + (a, b)))

    def differential(self, m):
        """d of a monomial as a dict ``monomial -> coefficient`` (cached).

        Writing m = P * xi_c^(mu) * S, the block contributes
        (-1)^{|P| + p_c * odd(P)} * (d xi^c) * m', where m' is m with one
        copy of c removed.
        """
        cached = self._d_cache.get(m)
        if cached is not None:
            return cached
        out = {}
        dxi = self._dxi
        par = self.parities
        times = self._times_pair
        t, n = 0, len(m)
        odd_prefix = 0
        while t < n:
            c = m[t]
            e = t
            while e < n and m[e] == c:
                e += 1
            terms = dxi.get(c)
            if terms:
                rest = m[:t] + m[t + 1:]
                flip = (t + (par[c] & odd_prefix)) & 1
                for (a, b), coef in terms:
                    c1, mono = times(a, b, rest)
                    if not c1:
                        continue
                    v = out.get(mono, 0) + (-c1 if flip else c1) * coef
                    if v:
                        out[mono] = v
                    else:
                        del out[mono]
            if par[c]:
                odd_prefix += e - t
            t = e
        self._d_cache[m] = out
        return out

    def image_monomials(self, m):
        return set(self.differential(m))

    def inverse_image_monomials(self, m):
        """(k-1)-monomials whose differential contains ``m``.

        Candidates come from replacing two factors a, b of m by some c with
        e_c in supp [e_a, e_b]; each is confirmed against its differential
        because coefficients can cancel.
        """
        if len(m) < 2:
            return set()
        pairs = self._pairs
        par = self.parities
        vals = sorted(set(m))
        cands = set()
        for i, a in enumerate(vals):
            for b in vals[i:]:
                if a == b and m.count(a) < 2:
                    continue
                terms = pairs.get((a, b))
                if not terms:
                    continue
                rest = list(m)
                rest.remove(a)
                rest.remove(b)
                for c in terms:
                    if not par[c] and c in rest:
                        continue
                    cands.add(tuple(sorted(rest + [c])))
        d = self.differential
        return {cand for cand in cands if m in d(cand)}


def complex_of(alg):
    cx = getattr(alg, "_cochain_complex", None)
    if cx is None:
        cx = CochainComplex(alg)
        alg._cochain_complex = cx
    return cx


def monomial_grade(alg, m):
    return complex_of(alg).grade(tuple(m))


def is_admissible(alg, m):
    return complex_of(alg).is_admissible(tuple(m))


def enumerate_monomials(alg, k, g):
    return complex_of(alg).enumerate(k, g)


def differential(alg, m):
    m = tuple(m)
    cx = complex_of(alg)
    if not cx.is_admissible(m):
        raise AdmissibilityError(f"{m} is not an admissible monomial")
    return dict(cx.differential(m))


def image_monomials(alg, m):
    return complex_of(alg).image_monomials(tuple(m))


def inverse_image_monomials(alg, m):
    return complex_of(alg).inverse_image_monomials(tuple(m))


def multiply_monomials(alg, a, b):
    return complex_of(alg).multiply(tuple(a), tuple(b))


class Cochain:
    """Finite linear combination of monomials of one degree k."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {}
        for m, c in (terms or {}).items():
            if c:
                self.terms[tuple(m)] = Fraction(c)

    @classmethod
    def monomial(cls, alg, m, coef=1):
        return cls(alg, {tuple(m): coef})

    @classmethod
    def one(cls, alg):
        return cls(alg, {(): 1})

    @property
    def degree(self):
        ks = {len(m) for m in self.terms}
        return ks.pop() if len(ks) == 1 else None

    @property
    def grade(self):
        cx = complex_of(self.alg)
        gs = {cx.grade(m) for m in self.terms}
        return gs.pop() if len(gs) == 1 else None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Cochain(self.alg, out)

    def __neg__(self):
        return Cochain(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f):
        return Cochain(self.alg, {m: c * f for m, c in self.terms.items()})

    def d(self):
        cx = complex_of(self.alg)
        out = {}
        for m, c in self.terms.items():
            for mm, v in cx.differential(m).items():
                out[mm] = out.get(mm, 0) + c * v
        return Cochain(self.alg, {m: v for m, v in out.items() if v})

    def wedge(self, other):
        cx = complex_of(self.alg)
        out = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                coef, m = cx.multiply(a, b)
                if coef:
                    out[m] = out.get(m, 0) + coef * ca * cb
        return Cochain(self.alg, {m: v for m, v in out.items() if v})

    __mul__ = wedge

    def to_string(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            s = format_monomial(self.alg, m)
            parts.append(s if c == 1 else f"{c}*{s}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Cochain({self.to_string()})"
