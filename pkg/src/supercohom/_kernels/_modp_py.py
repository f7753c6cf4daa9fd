"""Pure-Python incremental row reduction over F_p (fallback backend)."""

__all__ = ["ModpReducer", "rank_mod_p"]


class ModpReducer:
    """Incrementally maintained echelon system of sparse rows over F_p.

    Each stored row is normalized to coefficient 1 at its pivot, the
    smallest column (or the largest one with ``last=True``).  ``add_row`` reduces a new relation modulo the system and keeps
    it when the remainder is nonzero.
    """

    def __init__(self, p, last=False):
        if p < 2 or p >= 2**31:
            raise ValueError("p must satisfy 2 <= p < 2**31")
        self.p = p
        self.last = last
        self._pivots = {}
        self.ops = 0

    @property
    def rank(self):
        return len(self._pivots)

    def pivot_columns(self):
        return sorted(self._pivots)

    def add_row(self, cols, vals):
        p = self.p
        row = {}
        for c, v in zip(cols, vals):
            v = (row.get(c, 0) + v) % p
            if v:
                row[c] = v
            else:
                row.pop(c, None)
        pivots = self._pivots
        pick = max if self.last else min
        ops = 0
        while row:
            c = pick(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {j: v * inv % p for j, v in row.items()}
                self.ops += ops
                return c
            f = row[c]
            for j, w in piv.items():
                v = (row.get(j, 0) - f * w) % p
                if v:
                    row[j] = v
                else:
                    del row[j]
            ops += len(piv)
        self.ops += ops
        return -1


def rank_mod_p(rows, p, last=False):
    """Rank over F_p of an iterable of sparse rows (dicts column -> int)."""
    red = ModpReducer(p, last)
    for row in rows:
        red.add_row(list(row.keys()), list(row.values()))
    return red.rank
