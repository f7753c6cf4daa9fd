# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled incremental row reduction over F_p.

Same contract as ``_modp_py``; rows are scattered into a dense accumulator
and reduced against pivot rows held in flat C arrays.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset


cdef inline int64_t _powmod(int64_t a, int64_t e, int64_t m):
    cdef int64_t r = 1
    a %= m
    while e > 0:
        if e & 1:
            r = r * a % m
        a = a * a % m
        e >>= 1
    return r


cdef class ModpReducer:
    cdef readonly int64_t p
    cdef public int64_t ops
    cdef int64_t* acc
    cdef int64_t* pivot_of_col
    cdef Py_ssize_t col_cap
    cdef int64_t* pstart
    cdef int64_t* plen
    cdef Py_ssize_t npiv, piv_cap
    cdef int64_t* pcols
    cdef int64_t* pvals
    cdef Py_ssize_t nnz, nnz_cap
    cdef readonly bint last

    def __cinit__(self, p, last=False):
        if p < 2 or p >= 2**31:
            raise ValueError("p must satisfy 2 <= p < 2**31")
        self.p = p
        self.last = last
        self.ops = 0
        self.col_cap = 0
        self.acc = NULL
        self.pivot_of_col = NULL
        self.npiv = 0
        self.piv_cap = 16
        self.pstart = <int64_t*> malloc(self.piv_cap * sizeof(int64_t))
        self.plen = <int64_t*> malloc(self.piv_cap * sizeof(int64_t))
        self.nnz = 0
        self.nnz_cap = 256
        self.pcols = <int64_t*> malloc(self.nnz_cap * sizeof(int64_t))
        self.pvals = <int64_t*> malloc(self.nnz_cap * sizeof(int64_t))
        if not (self.pstart and self.plen and self.pcols and self.pvals):
            raise MemoryError()

    def __dealloc__(self):
        free(self.acc)
        free(self.pivot_of_col)
        free(self.pstart)
        free(self.plen)
        free(self.pcols)
        free(self.pvals)

    cdef int _ensure_cols(self, Py_ssize_t need) except -1:
        cdef Py_ssize_t cap = self.col_cap, i
        if need <= cap:
            return 0
        while cap < need:
            cap = cap * 2 if cap else 64
        cdef int64_t* a = <int64_t*> realloc(self.acc, cap * sizeof(int64_t))
        if a == NULL:
            raise MemoryError()
        self.acc = a
        cdef int64_t* q = <int64_t*> realloc(self.pivot_of_col, cap * sizeof(int64_t))
        if q == NULL:
            raise MemoryError()
        self.pivot_of_col = q
        memset(self.acc + self.col_cap, 0, (cap - self.col_cap) * sizeof(int64_t))
        for i in range(self.col_cap, cap):
            self.pivot_of_col[i] = -1
        self.col_cap = cap
        return 0

    cdef int _ensure_store(self, Py_ssize_t extra) except -1:
        cdef Py_ssize_t cap
        cdef int64_t* a
        if self.npiv + 1 > self.piv_cap:
            cap = self.piv_cap * 2
            a = <int64_t*> realloc(self.pstart, cap * sizeof(int64_t))
            if a == NULL:
                raise MemoryError()
            self.pstart = a
            a = <int64_t*> realloc(self.plen, cap * sizeof(int64_t))
            if a == NULL:
                raise MemoryError()
            self.plen = a
            self.piv_cap = cap
        if self.nnz + extra > self.nnz_cap:
            cap = self.nnz_cap
            while cap < self.nnz + extra:
                cap *= 2
            a = <int64_t*> realloc(self.pcols, cap * sizeof(int64_t))
            if a == NULL:
                raise MemoryError()
            self.pcols = a
            a = <int64_t*> realloc(self.pvals, cap * sizeof(int64_t))
            if a == NULL:
                raise MemoryError()
            self.pvals = a
            self.nnz_cap = cap
        return 0

    @property
    def rank(self):
        return self.npiv

    def pivot_columns(self):
        cdef Py_ssize_t i
        if self.last:
            return sorted(self.pcols[self.pstart[i] + self.plen[i] - 1] for i in range(self.npiv))
        return sorted(self.pcols[self.pstart[i]] for i in range(self.npiv))

    def add_row(self, cols, vals):
        cdef int64_t p = self.p
        cdef Py_ssize_t lo = -1, hi = -1, c, t, j, piv
        cdef int64_t v, f, w, ops = 0
        cdef Py_ssize_t maxc = -1
        for c in cols:
            if c < 0:
                raise ValueError("negative column index")
            if c > maxc:
                maxc = c
        if maxc < 0:
            return -1
        self._ensure_cols(maxc + 1)
        cdef int64_t* acc = self.acc
        for c, v in zip(cols, vals):
            v %= p
            if v < 0:
                v += p
            acc[c] = (acc[c] + v) % p
            if lo < 0 or c < lo:
                lo = c
            if c > hi:
                hi = c
        if self.last:
            return self._reduce_last(lo, hi)
        c = lo
        while c <= hi:
            if acc[c] == 0:
                c += 1
                continue
            piv = self.pivot_of_col[c]
            if piv < 0:
                break
            f = acc[c]
            for t in range(self.pstart[piv], self.pstart[piv] + self.plen[piv]):
                j = self.pcols[t]
                w = acc[j] - f * self.pvals[t] % p
                if w < 0:
                    w += p
                acc[j] = w
                if j > hi:
                    hi = j
            ops += self.plen[piv]
            c += 1
        self.ops += ops
        if c > hi:
            return -1
        return self._store(c, c, hi)

    cdef Py_ssize_t _reduce_last(self, Py_ssize_t lo, Py_ssize_t hi) except -2:
        # pivot at the largest column; pivot rows only reach leftwards
        cdef int64_t p = self.p
        cdef int64_t* acc = self.acc
        cdef Py_ssize_t c = hi, t, j, piv
        cdef int64_t f, w, ops = 0
        while c >= lo:
            if acc[c] == 0:
                c -= 1
                continue
            piv = self.pivot_of_col[c]
            if piv < 0:
                break
            f = acc[c]
            for t in range(self.pstart[piv], self.pstart[piv] + self.plen[piv]):
                j = self.pcols[t]
                w = acc[j] - f * self.pvals[t] % p
                if w < 0:
                    w += p
                acc[j] = w
                if j < lo:
                    lo = j
            ops += self.plen[piv]
            c -= 1
        self.ops += ops
        if c < lo:
            return -1
        return self._store(c, lo, c)

    cdef Py_ssize_t _store(self, Py_ssize_t c, Py_ssize_t a, Py_ssize_t b) except -2:
        # move acc[a..b] into a new pivot row normalized at column c; clears acc
        cdef int64_t p = self.p
        cdef int64_t* acc = self.acc
        cdef Py_ssize_t j, cnt = 0
        cdef int64_t inv
        for j in range(a, b + 1):
            if acc[j]:
                cnt += 1
        self._ensure_store(cnt)
        inv = _powmod(acc[c], p - 2, p)
        self.pstart[self.npiv] = self.nnz
        self.plen[self.npiv] = cnt
        for j in range(a, b + 1):
            if acc[j]:
                self.pcols[self.nnz] = j
                self.pvals[self.nnz] = acc[j] * inv % p
                self.nnz += 1
                acc[j] = 0
        self.pivot_of_col[c] = self.npiv
        self.npiv += 1
        return c


def rank_mod_p(rows, p, last=False):
    """Rank over F_p of an iterable of sparse rows (dicts column -> int)."""
    red = ModpReducer(p, last)
    for row in rows:
        red.add_row(list(row.keys()), list(row.values()))
    return red.rank
