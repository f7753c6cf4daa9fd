"""Integer Smith normal form with explicit unimodular transforms."""

from dataclasses import dataclass, field

__all__ = ["SmithDecomposition", "smith_normal_form", "det", "identity", "matmul"]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = [[0] * ncols for _ in a]
    for i, row in enumerate(a):
        o = out[i]
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(ncols):
                    if bk[j]:
                        o[j] += x * bk[j]
    return out


def det(a):
    """Exact determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass
class SmithDecomposition:
    """``U @ D @ V == S`` with S diagonal, ``s_1 | s_2 | ... | s_r``."""

    invariant_factors: list
    U: list
    V: list
    U_inv: list
    V_inv: list
    S: list
    shape: tuple = field(default=(0, 0))

    @property
    def rank(self):
        return len(self.invariant_factors)

    r = rank


def smith_normal_form(D, ncols=None):
    """Smith normal form of an integer matrix given as a list of rows.

    Pivot choice: smallest nonzero absolute value in the active block.
    ``ncols`` is needed only for matrices with zero rows.
    """
    A = [[int(x) for x in row] for row in D]
    nr = len(A)
    nc = len(A[0]) if A else (ncols or 0)
    if ncols is not None and A and len(A[0]) != ncols:
        raise ValueError("ncols disagrees with row length")
    U, Ui = identity(nr), identity(nr)
    V, Vi = identity(nc), identity(nc)

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]
            for row in Ui:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a, b = A[dst], A[src]
        for j in range(nc):
            if b[j]:
                a[j] += q * b[j]
        a, b = U[dst], U[src]
        for j in range(nr):
            if b[j]:
                a[j] += q * b[j]
        for row in Ui:
            if row[dst]:
                row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in A:
            if row[src]:
                row[dst] += q * row[src]
        for row in V:
            if row[src]:
                row[dst] += q * row[src]
        a, b = Vi[src], Vi[dst]
        for j in range(nc):
            if b[j]:
                a[j] -= q * b[j]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            row = A[i]
            for j in range(t, nc):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            piv = A[t][t]
            clean = True
            for i in range(t + 1, nr):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // piv))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, nc):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // piv))
                    if A[t][j]:
                        clean = False
            if not clean:
                # bring the smallest remainder in row/column t to the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t, nr) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, nc) if A[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if A[i][j] % piv:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
            for row in Ui:
                row[t] = -row[t]
        t += 1
    factors = [A[i][i] for i in range(t)]
    return SmithDecomposition(factors, U, V, Ui, Vi, A, (nr, nc))
