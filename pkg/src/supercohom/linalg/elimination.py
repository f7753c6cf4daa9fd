"""Gaussian elimination over fields (Q and F_p).

Rows are sparse dicts ``column -> value``.  Rank over F_p goes through the
compiled kernel when available; everything else is plain Python.
"""

from fractions import Fraction

from .. import _kernels
from ..errors import UnsupportedRing
from .rings import QQ
from .sparse import SparseMatrix

__all__ = [
    "EchelonSystem",
    "reduce_relation",
    "rank",
    "rref",
    "nullspace",
    "solve",
]


class EchelonSystem:
    """Rows with distinct leading columns, each normalized to leading 1."""

    def __init__(self, ring=QQ):
        if not ring.is_field:
            raise UnsupportedRing("relation reduction needs a field; use the SNF path over Z")
        self.ring = ring
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def add(self, row):
        """Reduce ``row`` and store it if independent; returns the remainder."""
        r = reduce_relation(row, self)
        if r:
            self.pivots[min(r)] = r
        return r


def _axpy(row, f, piv, ring):
    # row -= f * piv, in place
    if ring.kind == "Fp":
        p = ring.p
        for j, w in piv.items():
            v = (row.get(j, 0) - f * w) % p
            if v:
                row[j] = v - p if v > p // 2 else v
            else:
                row.pop(j, None)
    else:
        for j, w in piv.items():
            v = row.get(j, 0) - f * w
            if v:
                row[j] = v
            else:
                row.pop(j, None)


def reduce_relation(row, system):
    """Reduce ``row`` modulo ``system``; nonzero results come back normalized.

    ``system`` is an :class:`EchelonSystem`.  A zero (empty) result means
    the row lies in the span of the system.
    """
    ring = system.ring
    if not ring.is_field:
        raise UnsupportedRing("relation reduction needs a field")
    r = {j: ring.convert(v) for j, v in row.items()}
    r = {j: v for j, v in r.items() if v}
    pivots = system.pivots
    while r:
        c = min(r)
        piv = pivots.get(c)
        if piv is None:
            break
        _axpy(r, r[c], piv, ring)
    if not r:
        return {}
    lead = r[min(r)]
    if lead != 1:
        inv = ring.inv(lead)
        r = {j: ring.mul(v, inv) for j, v in r.items()}
    return r


def rank(matrix):
    """Row rank of a SparseMatrix over a field."""
    ring = matrix.ring
    if not ring.is_field:
        raise UnsupportedRing("rank over Z: use smith_normal_form")
    if ring.kind == "Fp":
        return _kernels.rank_mod_p(matrix.rows, ring.p)
    system = EchelonSystem(ring)
    for row in matrix.rows:
        system.add(row)
    return len(system)


def rref(matrix):
    """Reduced row echelon form; returns (rows, pivot_columns) with rows sorted by pivot."""
    ring = matrix.ring
    if not ring.is_field:
        raise UnsupportedRing("rref needs a field")
    system = EchelonSystem(ring)
    for row in matrix.rows:
        system.add(row)
    cols = sorted(system.pivots)
    rows = [dict(system.pivots[c]) for c in cols]
    # back substitution, bottom-up
    for a in range(len(cols) - 1, -1, -1):
        ca = cols[a]
        for b in range(a):
            f = rows[b].get(ca)
            if f:
                _axpy(rows[b], f, rows[a], ring)
    return rows, cols


def nullspace(matrix):
    """Basis of {x : matrix x = 0}, one vector per free column (coefficient 1 there)."""
    rows, pivots = rref(matrix)
    ring = matrix.ring
    pivset = set(pivots)
    basis = []
    for free in range(matrix.ncols):
        if free in pivset:
            continue
        v = {free: ring.convert(1)}
        for row, pc in zip(rows, pivots):
            c = row.get(free)
            if c:
                v[pc] = ring.normalize(-c)
        basis.append(v)
    return basis


def solve(matrix, rhs):
    """One solution x of ``matrix @ x = rhs`` (rhs a dict row -> value), or None."""
    ring = matrix.ring
    if not ring.is_field:
        raise UnsupportedRing("solve needs a field")
    # eliminate on the augmented rows [A | b]
    n = matrix.ncols
    aug = []
    for i, row in enumerate(matrix.rows):
        r = dict(row)
        b = ring.convert(rhs.get(i, 0))
        if b:
            r[n] = b
        aug.append(r)
    rows, pivots = rref(SparseMatrix(aug, n + 1, ring))
    if pivots and pivots[-1] == n:
        return None
    x = {}
    for row, pc in zip(rows, pivots):
        b = row.get(n)
        if b:
            x[pc] = b
    return x


def to_fp_rows(matrix, p):
    """Integer rows mod p in [0, p) for the kernels (raises PrimeSkip)."""
    from .rings import phi_p

    out = []
    for row in matrix.rows:
        r = {}
        for j, v in row.items():
            w = phi_p(v, p) % p if isinstance(v, Fraction) else v % p
            if w:
                r[j] = w
        out.append(r)
    return out
