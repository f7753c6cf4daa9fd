"""Independent reference implementations used only by the tests."""

from fractions import Fraction
from itertools import combinations


def sort_with_sign(alg, xs):
    """Sort a tuple of element indices by adjacent swaps; (sign, sorted) or (0, None)."""
    par = alg.parities
    xs = list(xs)
    sign = 1
    for i in range(len(xs)):
        for j in range(len(xs) - 1 - i):
            a, b = xs[j], xs[j + 1]
            if a > b:
                xs[j], xs[j + 1] = b, a
                sign *= -1 if not (par[a] and par[b]) else 1
    for a, b in zip(xs, xs[1:]):
        if a == b and not par[a]:
            return 0, None
    return sign, tuple(xs)


def evaluate(alg, cochain, xs):
    """Value of a cochain (dict monomial -> coef) on a tuple of basis elements."""
    s, key = sort_with_sign(alg, xs)
    if not s:
        return 0
    return s * cochain.get(key, 0)


def evaluate_vec(alg, cochain, first, rest):
    # cochain applied to (vector, basis elements...), multilinear in the first slot
    return sum(c * evaluate(alg, cochain, (k,) + tuple(rest)) for k, c in first.items())


def ce_differential(alg, m, upper_monomials):
    """d(monomial) by the textbook formula on function cochains.

    (dc)(x_1..x_{k+1}) = sum_{i<j} (-1)^{i+j} eps_ij c([x_i, x_j], x_1..^i..^j..x_{k+1})
    where eps_ij is the Koszul sign of moving x_i, x_j to the front.
    """
    par = alg.parities
    c = {tuple(m): 1}
    out = {}
    for u in upper_monomials:
        total = Fraction(0)
        n = len(u)
        for i, j in combinations(range(n), 2):
            xi, xj = u[i], u[j]
            e = par[xi] * sum(par[u[t]] for t in range(i))
            e += par[xj] * sum(par[u[t]] for t in range(j) if t != i)
            sign = (-1) ** (i + j + e)  # 1-based (-1)^{i+j} equals 0-based
            rest = [u[t] for t in range(n) if t not in (i, j)]
            br = alg.bracket(xi, xj)
            if br:
                total += sign * evaluate_vec(alg, c, br, rest)
        if total:
            out[tuple(u)] = total
    return out


def full_betti(alg, k, g):
    """dim H^k_g over Q from the unsplit matrices, ranks by sympy."""
    from sympy import QQ
    from sympy.polys.matrices import DomainMatrix

    from supercohom import complex_of

    cx = complex_of(alg)
    lower, middle, upper = cx.enumerate(k - 1, g), cx.enumerate(k, g), cx.enumerate(k + 1, g)

    def rank(src, dst):
        if not src or not dst:
            return 0
        pos = {m: i for i, m in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        for j, m in enumerate(src):
            for mm, c in cx.differential(m).items():
                rows[pos[mm]][j] = QQ(c.numerator, c.denominator) if hasattr(c, "denominator") else QQ(c)
        return DomainMatrix(rows, (len(dst), len(src)), QQ).rank()

    return len(middle) - rank(middle, upper) - rank(lower, middle)


def dense_invariant_factors(a):
    """Invariant factors by plain elementary row/column operations (no transforms)."""
    A = [list(map(int, r)) for r in a]
    nr = len(A)
    nc = len(A[0]) if A else 0
    out = []
    for t in range(min(nr, nc)):
        while True:
            nz = [(abs(A[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if A[i][j]]
            if not nz:
                return out
            _, i, j = min(nz)
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            piv = A[t][t]
            for i in range(t + 1, nr):
                q = A[i][t] // piv
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
            for j in range(t + 1, nc):
                q = A[t][j] // piv
                if q:
                    for row in A:
                        row[j] -= q * row[t]
            if any(A[i][t] for i in range(t + 1, nr)) or any(A[t][j] for j in range(t + 1, nc)):
                continue  # a smaller remainder exists, pick it as the next pivot
            bad = [i for i in range(t + 1, nr) if any(A[i][j] % piv for j in range(t + 1, nc))]
            if not bad:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
        out.append(abs(A[t][t]))
    return out


def _unimodular(rng, n, steps):
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    Ui = [r[:] for r in U]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        q = rng.choice([-2, -1, 1, 2])
        U[i] = [x + q * y for x, y in zip(U[i], U[j])]  # row op on U
        for row in Ui:  # inverse column op on U^-1
            row[j] -= q * row[i]
    return U, Ui


def _mul(a, b, n_inner, ncols):
    return [[sum(a[i][k] * b[k][j] for k in range(n_inner)) for j in range(ncols)]
            for i in range(len(a))]


def random_complex(rng, torsion_primes=(2, 3, 5, 7)):
    """Integer complex Z^n --D'--> Z^m --D--> Z^l with D D' = 0, dense lists."""
    n, l = rng.randint(0, 5), rng.randint(0, 5)
    a = rng.randint(0, min(n, 4))
    b = rng.randint(0, min(l, 4))
    c = rng.randint(0, 3)
    m = a + b + c
    Dp = [[0] * n for _ in range(m)]
    for i in range(a):
        f = rng.choice(torsion_primes) if rng.random() < 0.4 else 1
        for j in range(n):
            Dp[i][j] = f * rng.randint(-3, 3)
    D = [[0] * m for _ in range(l)]
    for i in range(l):
        f = rng.choice(torsion_primes) if rng.random() < 0.3 else 1
        for j in range(a, a + b):
            D[i][j] = f * rng.randint(-3, 3)
    W, Wi = _unimodular(rng, m, 3 * m)
    return _mul(W, Dp, m, n), _mul(D, Wi, m, m), (n, m, l)


def uct_check(Dp, D, shape, primes):
    """Per prime: (betti_p, betti_Q, p-torsion count from raw SNFs, Z torsion)."""
    from sympy import GF as SGF, Matrix, QQ as SQQ, ZZ as SZZ
    from sympy.matrices.normalforms import invariant_factors
    from sympy.polys.matrices import DomainMatrix

    from supercohom.linalg import GF, QQ, ZZ, SparseMatrix, cohomology_decomposition

    n, m, l = shape
    Dp_, D_ = SparseMatrix.from_dense(Dp, ZZ, ncols=n), SparseMatrix.from_dense(D, ZZ, ncols=m)

    def rank(rows, ncols, dom):
        if not rows or not ncols:
            return 0
        return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(dom).rank()

    def factors(rows):
        if not rows or not rows[0]:
            return []
        return [int(x) for x in invariant_factors(Matrix(rows), domain=SZZ) if x]

    ref_q = m - rank(D, m, SQQ) - rank(Dp, n, SQQ)
    fp, fd = factors(Dp), factors(D)
    out = {}
    zres = cohomology_decomposition(Dp_, D_, ZZ)
    qres = cohomology_decomposition(Dp_.map_to(QQ), D_.map_to(QQ), QQ)
    assert qres.betti == ref_q == zres.betti
    assert zres.torsion == [x for x in fp if x > 1]
    for p in primes:
        bp = cohomology_decomposition(Dp_, D_, GF(p), classes=False).betti
        ref_p = m - rank(D, m, SGF(p)) - rank(Dp, n, SGF(p))
        assert bp == ref_p
        tors = sum(1 for x in fp if x % p == 0) + sum(1 for x in fd if x % p == 0)
        out[p] = (bp, qres.betti, tors)
    return out


def small_cells(alg, kmax, limit=300):
    """Every (k, g) inside the generated window with 0 < dim C^k_g <= limit."""
    from supercohom import complex_of

    cx = complex_of(alg)
    lo = alg.lowest_grade
    out = []
    for k in range(1, kmax + 1):
        for g in range(k * lo, alg.grade_max + 1):
            if g - k * lo > alg.grade_max:
                break
            n = len(cx.enumerate(k, g))
            if 0 < n <= limit:
                out.append((k, g))
    return out
