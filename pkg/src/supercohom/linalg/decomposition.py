"""Cohomology of a three-term complex  C^{k-1} --D'--> C^k --D--> C^{k+1}.

Over Z the computation runs through two Smith normal forms: one of D, which
splits off the non-cocycles, and one of the coboundary matrix restricted to
the cocycle lattice.  Over a field only ranks are needed for the dimension;
class representatives come from :func:`canonical_classes`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from ..errors import ComplexError
from .elimination import nullspace, rank, rref, _axpy
from .modular import crt_combine, rational_reconstruction
from .rings import GF, QQ, ZZ
from .smith import smith_normal_form, matmul
from .sparse import SparseMatrix

__all__ = [
    "DecompositionResult",
    "cohomology_decomposition",
    "canonical_classes",
    "crt_classes",
    "check_complex",
    "primitive",
]


@dataclass
class DecompositionResult:
    m: int
    r: int
    r_prime: int
    betti: int
    torsion: list = field(default_factory=list)
    basis_classes: list = field(default_factory=list)
    torsion_classes: list = field(default_factory=list)
    ring: object = QQ


def check_complex(D_prime, D):
    if D.ncols != D_prime.nrows:
        raise ValueError(f"D has {D.ncols} columns but D' has {D_prime.nrows} rows")
    ring = D.ring if D.ring == D_prime.ring else QQ
    if ring != D.ring:
        D, D_prime = D.map_to(ring), D_prime.map_to(ring)
    if not (D @ D_prime).is_zero():
        raise ComplexError("D @ D' != 0")


def primitive(vec):
    """Scale a rational vector to coprime integers with positive leading entry."""
    if not vec:
        return {}
    den = 1
    for v in vec.values():
        den = lcm(den, Fraction(v).denominator)
    ints = {j: int(Fraction(v) * den) for j, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if ints[min(ints)] < 0:
        g = -g
    return {j: v // g for j, v in sorted(ints.items())}


def canonical_classes(D_prime, D):
    """Echelon basis of a canonical complement of Im D' inside Ker D.

    Kernel vectors are reduced modulo the reduced echelon form of the
    coboundary space and the remainders are brought to reduced echelon form,
    so the answer depends only on the two subspaces and the column order.
    """
    ring = D.ring
    Z = nullspace(D)
    B_rows, B_piv = rref(D_prime.transpose())
    reduced = []
    for z in Z:
        z = dict(z)
        for row, c in zip(B_rows, B_piv):
            f = z.get(c)
            if f:
                _axpy(z, f, row, ring)
        if z:
            reduced.append(z)
    W, _ = rref(SparseMatrix(reduced, D.ncols, ring))
    return W


def _free_decomposition(D_prime, D):
    Di = D.to_integer() if D.ring != ZZ else D
    # clear denominators by columns of D' (rescales C^{k-1}, never C^k)
    Dpt = D_prime.transpose()
    Dpi = (Dpt.to_integer() if Dpt.ring != ZZ else Dpt).transpose()
    m = D.ncols
    snf1 = smith_normal_form(Di.to_dense(), ncols=m)
    r = snf1.rank
    T = matmul(snf1.V_inv, Dpi.to_dense()) if m else []
    if any(any(row) for row in T[:r]):
        raise ComplexError("V^-1 D' has nonzero rows above the cocycle block")
    n = D_prime.ncols
    snf2 = smith_normal_form(T[r:], ncols=n)
    rp = snf2.rank
    # a = V (U')^-1, with U' = diag(I_r, U~')
    size = m - r
    Uinv_ext = [[int(i == j) for j in range(m)] for i in range(m)]
    for i in range(size):
        for j in range(size):
            Uinv_ext[r + i][r + j] = snf2.U_inv[i][j]
    A = matmul(snf1.V, Uinv_ext) if m else []

    def column(j):
        return {i: A[i][j] for i in range(m) if A[i][j]}

    torsion = [s for s in snf2.invariant_factors if s > 1]
    classes = [column(j) for j in range(r + rp, m)]
    tors_cls = [column(r + i) for i, s in enumerate(snf2.invariant_factors) if s > 1]
    return DecompositionResult(m, r, rp, m - r - rp, torsion, classes, tors_cls, ZZ)


def cohomology_decomposition(D_prime, D, ring=None, classes=True):
    """Betti number, torsion and class representatives of one subcomplex.

    ``ring`` is Z (two-stage Smith normal form), Q or F_p.
    """
    ring = ring or D.ring
    check_complex(D_prime, D)
    if ring == ZZ:
        return _free_decomposition(D_prime, D)
    Dr, Dpr = D.map_to(ring), D_prime.map_to(ring)
    m = D.ncols
    r = rank(Dr)
    rp = rank(Dpr)
    betti = m - r - rp
    basis = canonical_classes(Dpr, Dr) if classes and betti else []
    if classes and len(basis) != betti:
        raise ComplexError("class count disagrees with rank formula")
    return DecompositionResult(m, r, rp, betti, [], basis, [], ring)


def crt_classes(D_prime, D, primes, check_prime=2147483629):
    """Canonical classes over Q assembled from eliminations modulo ``primes``.

    Each prime gives the echelon class basis over F_q.  Primes whose
    dimension is not the smallest seen, or whose pivot pattern disagrees,
    are dropped as unlucky.  Entries are combined by CRT and rationally
    reconstructed; the result is accepted only if every vector is an exact
    cocycle and the vectors stay independent modulo coboundaries (checked
    modulo ``check_prime``).  Returns ``(classes, info)``, classes None on
    failure.
    """
    ring_in = QQ
    D, D_prime = D.map_to(ring_in), D_prime.map_to(ring_in)
    runs = []
    skipped = []
    for q in primes:
        Fq = GF(q)
        try:
            Dq, Dpq = D.map_to(Fq), D_prime.map_to(Fq)
        except ArithmeticError:
            skipped.append(q)
            continue
        W = canonical_classes(Dpq, Dq)
        runs.append((q, W, tuple(min(w) for w in W)))
    info = {"primes": [q for q, _, _ in runs], "skipped": skipped, "unlucky": []}
    if not runs:
        return None, info
    dim = min(len(W) for _, W, _ in runs)
    pattern = None
    good = []
    for q, W, piv in runs:
        if len(W) != dim or (pattern is not None and piv != pattern):
            info["unlucky"].append(q)
            continue
        pattern = piv
        good.append((q, W))
    info["dim"] = dim
    if dim == 0:
        return [], info
    classes = []
    for t in range(dim):
        cols = set()
        for _, W in good:
            cols.update(W[t])
        vec = {}
        for c in sorted(cols):
            value, modulus = crt_combine((W[t].get(c, 0), q) for q, W in good)
            x = rational_reconstruction(value, modulus)
            if x is None:
                info["reason"] = "reconstruction failed"
                return None, info
            if x:
                vec[c] = x
        classes.append(vec)
    for vec in classes:
        col = SparseMatrix([{0: vec[j]} if j in vec else {} for j in range(D.ncols)], 1, QQ)
        if not (D @ col).is_zero():
            info["reason"] = "reconstructed vector is not a cocycle"
            return None, info
    try:
        Fc = GF(check_prime)
        B = D_prime.transpose().map_to(Fc)
        stacked = SparseMatrix(B.rows + classes, D.ncols, QQ).map_to(Fc)
        if rank(stacked) != rank(B) + dim:
            info["reason"] = "classes dependent modulo coboundaries"
            return None, info
    except ArithmeticError:
        info["reason"] = "check prime divides a denominator"
        return None, info
    return classes, info
