"""Splitting a slice C^{k-1} -> C^k -> C^{k+1} of fixed grade into minimal subcomplexes.

A subcomplex is grown from one starting k-monomial by closing alternately
under the image and inverse-image monomial maps.  While it grows, every
new relation (the differential of a freshly processed k- or (k-1)-monomial)
can be fed to an incremental mod-p reducer, which gives the prefilter
dimension for free once closure ends.
"""

import heapq
import random
from dataclasses import dataclass, field

from . import _kernels
from .cochain import complex_of, format_monomial
from .errors import AdmissibilityError, EmptyError, PrimeSkip
from .linalg.rings import QQ, phi_p
from .linalg.sparse import SparseMatrix, write_triplets

__all__ = [
    "Subcomplex",
    "STRATEGIES",
    "choose_start",
    "construct_subcomplex",
    "partition_complex",
    "dump_subcomplex",
]

STRATEGIES = ("bottom", "top", "random")


@dataclass
class Subcomplex:
    """Bases ``lower``/``middle``/``upper`` (sorted) and the two matrices.

    ``D_prime`` is |middle| x |lower| (d on C^{k-1}), ``D`` is
    |upper| x |middle| (d on C^k).  ``modp`` holds the ranks found by the
    incremental reduction during closure, or None if it was not run.
    """

    id: int
    k: int
    g: int
    lower: tuple
    middle: tuple
    upper: tuple
    D_prime: SparseMatrix
    D: SparseMatrix
    modp: dict = field(default=None, repr=False)

    @property
    def dims(self):
        return (len(self.lower), len(self.middle), len(self.upper))

    def modp_dimension(self):
        if self.modp is None:
            return None
        return len(self.middle) - self.modp["r"] - self.modp["r_prime"]


def choose_start(strategy, remaining, rng=None):
    """Pick a starting monomial; ``remaining`` is any collection of monomials."""
    if not remaining:
        raise EmptyError("no monomials left to start from")
    if strategy == "bottom":
        return min(remaining)
    if strategy == "top":
        return max(remaining)
    if strategy == "random":
        if rng is None:
            rng = random.Random(0)
        return rng.choice(sorted(remaining))
    raise ValueError(f"unknown strategy {strategy!r}")


class _Level:
    """One of the three monomial sets with its pending worklist.

    Columns are numbered in discovery order.  Pending monomials come out
    lexicographically largest first; all have the same length, so the heap
    holds negated tuples.
    """

    def __init__(self):
        self.index = {}
        self.pending = []

    def add(self, m):
        if m not in self.index:
            self.index[m] = len(self.index)
            heapq.heappush(self.pending, tuple(-i for i in m))

    def take(self):
        return tuple(-i for i in heapq.heappop(self.pending))


def _feed(reducer, diff, level, p):
    if reducer is None:
        return
    cols, vals = [], []
    for mono, c in diff.items():
        cols.append(level.index[mono])
        vals.append(phi_p(c, p))
    reducer.add_row(cols, vals)


def construct_subcomplex(alg, start, k, g, prime=None, sid=0, ring=QQ):
    """Minimal subcomplex containing ``start``.

    With ``prime`` set, relations are reduced modulo that prime as they
    appear, pivoting on the most recently discovered column; closure finds
    new columns through the very rows being added, so most rows enter the
    echelon system with little or no reduction.  A denominator divisible by
    the prime disables the reduction (``modp`` stays None) without
    interrupting closure.
    """
    cx = complex_of(alg)
    start = tuple(start)
    if len(start) != k or not cx.is_admissible(start) or cx.grade(start) != g:
        raise AdmissibilityError(
            f"{format_monomial(alg, start)} is not an admissible ({k}, {g}) monomial")
    lower, middle, upper = _Level(), _Level(), _Level()
    middle.add(start)
    red_d = red_dp = None
    if prime is not None:
        red_d, red_dp = _kernels.ModpReducer(prime, True), _kernels.ModpReducer(prime, True)
    d = cx.differential

    def guarded(reducer, diff, level):
        nonlocal red_d, red_dp
        try:
            _feed(reducer, diff, level, prime)
        except PrimeSkip:
            red_d = red_dp = None

    while middle.pending:
        m = middle.take()
        for w in sorted(cx.inverse_image_monomials(m)):
            lower.add(w)
        dm = d(m)
        for w in dm:
            upper.add(w)
        guarded(red_d, dm, upper)
        while upper.pending:
            u = upper.take()
            for w in sorted(cx.inverse_image_monomials(u)):
                middle.add(w)
        while lower.pending:
            w = lower.take()
            dw = d(w)
            for v in dw:
                middle.add(v)
            guarded(red_dp, dw, middle)

    L, M, U = (tuple(sorted(x.index)) for x in (lower, middle, upper))
    mpos = {m: i for i, m in enumerate(M)}
    upos = {u: i for i, u in enumerate(U)}
    dp_rows = [{} for _ in M]
    for j, w in enumerate(L):
        for v, c in d(w).items():
            dp_rows[mpos[v]][j] = c
    d_rows = [{} for _ in U]
    for j, m in enumerate(M):
        for u, c in d(m).items():
            d_rows[upos[u]][j] = c
    modp = None
    if red_d is not None:
        modp = {"p": prime, "r": red_d.rank, "r_prime": red_dp.rank,
                "ops": red_d.ops + red_dp.ops}
    return Subcomplex(sid, k, g, L, M, U,
                      SparseMatrix(dp_rows, len(L), ring),
                      SparseMatrix(d_rows, len(M), ring), modp)


def partition_complex(alg, k, g, strategy="top", seed=0, prime=None):
    """All minimal subcomplexes whose middle bases cover C^k_g, in discovery order."""
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    order = complex_of(alg).enumerate(k, g)
    remaining = set(order)
    if strategy == "top":
        order = order[::-1]
    elif strategy == "random":
        # first survivor of a uniform shuffle is a uniform draw from the survivors
        order = list(order)
        random.Random(seed).shuffle(order)
    out = []
    pos = 0
    while remaining:
        while order[pos] not in remaining:
            pos += 1
        sub = construct_subcomplex(alg, order[pos], k, g, prime=prime, sid=len(out))
        remaining.difference_update(sub.middle)
        out.append(sub)
    return out


def dump_subcomplex(alg, sub, fh):
    """Write bases and both matrices in the sparse-triplet format."""
    fh.write(f"# subcomplex {sub.id} k={sub.k} g={sub.g}\n")
    for name, basis in (("lower", sub.lower), ("middle", sub.middle), ("upper", sub.upper)):
        fh.write(f"# {name} {len(basis)}\n")
        for i, m in enumerate(basis):
            fh.write(f"#  {i} {format_monomial(alg, m)}\n")
    fh.write("# D_prime\n")
    write_triplets(sub.D_prime, fh)
    fh.write("# D\n")
    write_triplets(sub.D, fh)
