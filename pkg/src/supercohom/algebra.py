"""Graded Lie superalgebras given by structure constants.

Built-in families are generated from polynomial generating functions:

* ``H(n)``   hamiltonians in n even variables modulo constants, Poisson bracket,
  grade = degree - 2;
* ``B(n)``   all functions of x^1..x^n, theta_1..theta_n with the Buttin bracket;
* ``Le(n)``  B(n) modulo constants;
* ``SB(n)``  divergence-free part of B(n) (odd Laplacian vanishes);
* ``SLe(n)`` SB(n) modulo constants.

For the antibracket families gr(x^i) = 1, gr(theta_i) = -1 and element parity
is opposite to the parity of its generating function.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import CapacityError, InvalidFamily, RangeError, SupercohomError
from .linalg import QQ, SparseMatrix, nullspace, rref
from .superpoly import (
    SuperPolynomial,
    buttin_bracket,
    monomials,
    odd_laplacian,
    poisson_bracket,
)

__all__ = [
    "BasisElement",
    "StructureTable",
    "Superalgebra",
    "InvalidAlgebra",
    "FAMILIES",
    "parse_family",
    "family_lowest_grade",
    "generate_basis",
    "build_algebra",
    "validate_structure",
]

FAMILIES = ("H", "B", "Le", "SB", "SLe")
MAX_N = 4


class InvalidAlgebra(SupercohomError, ValueError):
    def __init__(self, violations):
        super().__init__("invalid algebra:\n  " + "\n  ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class BasisElement:
    index: int
    parity: int  # 0 even, 1 odd
    grade: int
    label: str
    gen_fn: SuperPolynomial = field(default=None, compare=False)


class StructureTable:
    """Sparse brackets ``[e_i, e_j] = sum_k c^k_ij e_k``.

    ``forward`` maps ``(i, j)`` to a tuple of ``(k, coefficient)``; built-in
    tables only store ``i <= j``.  ``inverse`` maps ``k`` to all
    ``(i, j, coefficient)`` whose bracket involves ``e_k``.
    """

    def __init__(self, forward, grades):
        self.forward = {}
        for key, terms in forward.items():
            terms = tuple((k, Fraction(c)) for k, c in terms if c)
            if terms:
                self.forward[tuple(key)] = terms
        inv = {}
        for (i, j), terms in self.forward.items():
            for k, c in terms:
                inv.setdefault(k, []).append((i, j, c))
        self.inverse = {k: tuple(sorted(v)) for k, v in inv.items()}
        gi = {}
        for idx, g in enumerate(grades):
            gi.setdefault(g, []).append(idx)
        self.grade_index = gi

    def __eq__(self, other):
        return isinstance(other, StructureTable) and self.forward == other.forward


class Superalgebra:
    """Finite grade window of a graded Lie superalgebra.

    ``grade_min``/``grade_max`` bound the generated elements; brackets whose
    value would leave the window are not stored.  ``lowest_grade`` is the
    smallest grade the full algebra has, used for cochain window checks.
    """

    def __init__(self, name, elements, table, grade_min, grade_max,
                 lowest_grade=None, family=None, n=None):
        self.name = name
        self.elements = tuple(elements)
        self.table = table
        self.grade_min = grade_min
        self.grade_max = grade_max
        grades = [e.grade for e in self.elements]
        if lowest_grade is None:
            lowest_grade = min(grades) if grades else grade_min
        self.lowest_grade = lowest_grade
        self.family = family
        self.n = n
        self.parities = tuple(e.parity for e in self.elements)
        self.grades = tuple(grades)
        self._by_label = {e.label: e.index for e in self.elements}

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return (f"Superalgebra({self.name!r}, dim={len(self)}, "
                f"grades=[{self.grade_min}, {self.grade_max}])")

    @property
    def highest_grade(self):
        return self.grade_max

    def index_of(self, label):
        try:
            return self._by_label[label]
        except KeyError:
            raise RangeError(f"no element labelled {label!r}") from None

    def label(self, i):
        return self.elements[i].label

    def _check(self, i):
        if not 0 <= i < len(self.elements):
            raise RangeError(f"element index {i} outside 0..{len(self.elements) - 1}")

    def bracket(self, i, j):
        """[e_i, e_j] as a dict ``k -> coefficient``."""
        if isinstance(i, str):
            i = self.index_of(i)
        if isinstance(j, str):
            j = self.index_of(j)
        self._check(i)
        self._check(j)
        fw = self.table.forward
        if (i, j) in fw:
            return dict(fw[(i, j)])
        if (j, i) in fw:
            sign = 1 if self.parities[i] and self.parities[j] else -1
            return {k: sign * c for k, c in fw[(j, i)]}
        return {}

    def bracket_vec(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    def vector_parity(self, u):
        ps = {self.parities[i] for i in u}
        return ps.pop() if len(ps) == 1 else None


# -- families -------------------------------------------------------------

_FAMILY_RE = re.compile(r"^\s*(SLe|SB|Le|B|H)\s*\(?\s*(\d+)\s*\)?\s*$", re.IGNORECASE)


def parse_family(text):
    """``"SLe2"``, ``"SLe(2)"`` -> ``("SLe", 2)``."""
    m = _FAMILY_RE.match(text)
    if not m:
        raise InvalidFamily(f"unknown algebra family {text!r}")
    name = {f.lower(): f for f in FAMILIES}[m.group(1).lower()]
    return name, int(m.group(2))


def family_lowest_grade(family, n):
    return -1 if family == "H" else -n


def _antibracket_key(e, n):
    return (e[:n], tuple(-b for b in e[n:]))


def _antibracket_component(family, n, a, b):
    """Basis functions of the (even degree a, odd degree b) component."""
    monos = monomials(n, a, b)
    if family in ("Le", "SLe") and a == 0 and b == 0:
        return []
    monos.sort(key=lambda e: _antibracket_key(e, n))
    if family in ("B", "Le") or b == 0:
        return [(e, SuperPolynomial(n, {e: 1})) for e in monos]
    # divergence-free: kernel of the odd Laplacian; free columns come last so
    # that the echelon basis has unit coefficient on the preferred monomial
    cols = monos[::-1]
    images = [odd_laplacian(SuperPolynomial(n, {e: 1})) for e in cols]
    targets = sorted({t for img in images for t in img.terms})
    tindex = {t: i for i, t in enumerate(targets)}
    rows = [dict() for _ in targets]
    for j, img in enumerate(images):
        for t, c in img.terms.items():
            rows[tindex[t]][j] = c
    delta = SparseMatrix(rows, len(cols), QQ)
    _, pivots = rref(delta)
    free_cols = [j for j in range(len(cols)) if j not in set(pivots)]
    out = []
    # nullspace() yields one vector per free column, in column order
    for free, vec in zip(free_cols, nullspace(delta)):
        poly = SuperPolynomial(n, {cols[j]: c for j, c in vec.items()})
        out.append((cols[free], poly))
    out.sort(key=lambda t: _antibracket_key(t[0], n))
    return out


def _hamiltonian_component(n, degree):
    monos = [e for e in monomials(n, degree, 0)]
    monos.sort(key=lambda e: tuple(-x for x in e[:n]))
    return [(e, SuperPolynomial(n, {e: 1})) for e in monos]


def generate_basis(family, grade_min, grade_max, n=2):
    """Basis elements with grades in ``[grade_min, grade_max]`` and their brackets."""
    if isinstance(family, str) and family not in FAMILIES:
        family, n = parse_family(family)
    if family not in FAMILIES:
        raise InvalidFamily(f"unknown family {family!r}")
    if grade_max < grade_min:
        raise ValueError("grade_max < grade_min")
    if n < 1 or n > MAX_N:
        raise CapacityError(f"n={n} outside supported range 1..{MAX_N}")
    if family == "H" and n % 2:
        raise InvalidFamily("H(n) needs an even number n of variables")

    entries = []  # (sort key, free monomial, polynomial, parity, grade)
    for g in range(grade_min, grade_max + 1):
        if family == "H":
            deg = g + 2
            if deg < 1:
                continue
            for e, poly in _hamiltonian_component(n, deg):
                entries.append(((g, deg, tuple(-x for x in e[:n])), e, poly, 0, g))
        else:
            for b in range(0, n + 1):
                a = g + b
                if a < 0:
                    continue
                for e, poly in _antibracket_component(family, n, a, b):
                    key = (g, a, _antibracket_key(e, n))
                    entries.append((key, e, poly, 1 - b % 2, g))
    entries.sort(key=lambda t: t[0])
    elements = []
    for idx, (_, _, poly, parity, g) in enumerate(entries):
        label = f"{'O' if parity else 'E'}_{idx + 1}"
        elements.append(BasisElement(idx, parity, g, label, poly))

    free_of = {}
    for idx, (_, e, _, _, g) in enumerate(entries):
        free_of.setdefault(g, []).append((idx, e))

    bracket_fn = poisson_bracket if family == "H" else buttin_bracket
    drop_constants = family in ("H", "Le", "SLe")
    forward = {}
    for i, ei in enumerate(elements):
        for j in range(i, len(elements)):
            ej = elements[j]
            h = ei.grade + ej.grade
            if h > grade_max:
                break
            if h < grade_min:
                continue
            if i == j and not ei.parity:
                continue
            val = bracket_fn(ei.gen_fn, ej.gen_fn)
            if drop_constants:
                val = val.without_constant()
            if not val:
                continue
            terms = []
            recon = SuperPolynomial.zero(n)
            for k, e in free_of.get(h, ()):
                c = val.terms.get(e)
                if c:
                    terms.append((k, c))
                    recon = recon + elements[k].gen_fn * c
            if recon != val:
                raise SupercohomError(
                    f"bracket [{ei.label}, {ej.label}] leaves the generated basis")
            forward[(i, j)] = terms
    table = StructureTable(forward, [e.grade for e in elements])
    return elements, table


def build_algebra(family, grade_min=None, grade_max=1, n=None):
    """Generate a built-in family; ``family`` may be ``"SLe2"`` or ``("SLe", 2)``."""
    if isinstance(family, tuple):
        family, n = family
    elif n is None:
        family, n = parse_family(family)
    lowest = family_lowest_grade(family, n)
    if grade_min is None:
        grade_min = lowest
    elements, table = generate_basis(family, grade_min, grade_max, n)
    name = f"{family}({n})"
    return Superalgebra(name, elements, table, grade_min, grade_max,
                        lowest_grade=lowest, family=family, n=n)


# -- validation -----------------------------------------------------------

def validate_structure(alg, jacobi=True):
    """List of human-readable violations; empty means the table is valid."""
    out = []
    els = alg.elements
    N = len(els)
    fw = alg.table.forward
    for (i, j), terms in sorted(fw.items()):
        if not (0 <= i < N and 0 <= j < N):
            out.append(f"bracket ({i}, {j}) references a missing element")
            continue
        for k, c in terms:
            if not 0 <= k < N:
                out.append(f"[{i}, {j}] has term on missing element {k}")
                continue
            if els[i].grade + els[j].grade != els[k].grade:
                out.append(f"grading: [{els[i].label}, {els[j].label}] -> {els[k].label} "
                           f"({els[i].grade} + {els[j].grade} != {els[k].grade})")
            if els[i].parity ^ els[j].parity != els[k].parity:
                out.append(f"parity: [{els[i].label}, {els[j].label}] -> {els[k].label}")
        if i == j and not els[i].parity:
            out.append(f"anti-symmetry: [{els[i].label}, {els[i].label}] != 0 for even element")
        if i > j and (j, i) in fw:
            sign = 1 if els[i].parity and els[j].parity else -1
            expected = {k: sign * c for k, c in fw[(j, i)]}
            if expected != dict(terms):
                out.append(f"anti-symmetry: [{els[i].label}, {els[j].label}] inconsistent "
                           f"with [{els[j].label}, {els[i].label}]")
    inv = {}
    for (i, j), terms in fw.items():
        for k, c in terms:
            inv.setdefault(k, []).append((i, j, c))
    if {k: tuple(sorted(v)) for k, v in inv.items()} != alg.table.inverse:
        out.append("inverse index is not the transpose of the forward table")
    if out or not jacobi:
        return out
    gmin, gmax = alg.grade_min, alg.grade_max
    grades, par = alg.grades, alg.parities

    def inside(*gs):
        return all(gmin <= g <= gmax for g in gs)

    for x, y, z in product(range(N), repeat=3):
        gx, gy, gz = grades[x], grades[y], grades[z]
        if not inside(gx + gy, gy + gz, gx + gz, gx + gy + gz):
            continue
        lhs = alg.bracket_vec({x: 1}, alg.bracket(y, z))
        r1 = alg.bracket_vec(alg.bracket(x, y), {z: 1})
        r2 = alg.bracket_vec({y: 1}, alg.bracket(x, z))
        s = -1 if par[x] and par[y] else 1
        rhs = dict(r1)
        for k, c in r2.items():
            rhs[k] = rhs.get(k, 0) + s * c
        rhs = {k: c for k, c in rhs.items() if c}
        if lhs != rhs:
            out.append(f"Jacobi fails on ({els[x].label}, {els[y].label}, {els[z].label})")
    return out
