"""Row-sparse matrices and the sparse-triplet text format.

Triplet format: ``#`` comment lines, a header line ``% rows cols ring`` followed by one line per
nonzero entry ``row col numerator [denominator]`` (0-based indices).
"""

from fractions import Fraction

from ..errors import ParseError
from .rings import QQ, ZZ, GF, Ring

__all__ = ["SparseMatrix", "read_triplets", "write_triplets"]


class SparseMatrix:
    __slots__ = ("rows", "ncols", "ring")

    def __init__(self, rows, ncols, ring=QQ):
        self.ring = ring
        self.ncols = ncols
        clean = []
        for row in rows:
            r = {}
            for j, v in row.items():
                if not 0 <= j < ncols:
                    raise IndexError(f"column {j} out of range 0..{ncols - 1}")
                v = ring.convert(v)
                if v:
                    r[j] = v
            clean.append(r)
        self.rows = clean

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @classmethod
    def zeros(cls, nrows, ncols, ring=QQ):
        return cls([{} for _ in range(nrows)], ncols, ring)

    @classmethod
    def from_dense(cls, data, ring=QQ, ncols=None):
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        return cls([{j: v for j, v in enumerate(r) if v} for r in data], ncols, ring)

    def to_dense(self):
        zero = self.ring.convert(0)
        out = [[zero] * self.ncols for _ in self.rows]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out[i][j] = v
        return out

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def is_zero(self):
        return not any(self.rows)

    def transpose(self):
        cols = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                cols[j][i] = v
        return SparseMatrix(cols, self.nrows, self.ring)

    def map_to(self, ring):
        """Coefficient change; to F_p raises PrimeSkip on bad denominators."""
        return SparseMatrix(self.rows, self.ncols, ring)

    def to_integer(self):
        """Clear denominators row by row (rank-preserving, not SNF-preserving)."""
        from math import lcm

        rows = []
        for row in self.rows:
            den = 1
            for v in row.values():
                den = lcm(den, Fraction(v).denominator)
            rows.append({j: int(Fraction(v) * den) for j, v in row.items()})
        return SparseMatrix(rows, self.ncols, ZZ)

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ring = self.ring
        out = []
        for row in self.rows:
            acc = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    acc[j] = ring.add(acc.get(j, 0), ring.mul(a, b))
            out.append({j: v for j, v in acc.items() if v})
        return SparseMatrix(out, other.ncols, ring)

    __matmul__ = matmul

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()}, ring={self.ring})"


def _ring_from_tag(tag):
    if tag == "Q":
        return QQ
    if tag == "Z":
        return ZZ
    if tag.startswith("F_"):
        return GF(int(tag[2:]))
    raise ValueError(f"unknown ring tag {tag!r}")


def write_triplets(matrix, fh):
    fh.write(f"% {matrix.nrows} {matrix.ncols} {matrix.ring}\n")
    for i, row in enumerate(matrix.rows):
        for j in sorted(row):
            v = Fraction(row[j])
            if v.denominator == 1:
                fh.write(f"{i} {j} {v.numerator}\n")
            else:
                fh.write(f"{i} {j} {v.numerator} {v.denominator}\n")


def read_triplets(fh):
    header = None
    rows = None
    for lineno, line in enumerate(fh, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("%"):
            if header is not None:
                continue
            parts = line[1:].split()
            try:
                nrows, ncols = int(parts[0]), int(parts[1])
                ring = _ring_from_tag(parts[2]) if len(parts) > 2 else QQ
            except (IndexError, ValueError) as exc:
                raise ParseError(f"bad header: {exc}", lineno, 1) from None
            header = (nrows, ncols, ring)
            rows = [{} for _ in range(nrows)]
            continue
        if header is None:
            raise ParseError("missing '% rows cols ring' header", lineno, 1)
        parts = line.split()
        if len(parts) not in (3, 4):
            raise ParseError("expected 'row col num [den]'", lineno, 1)
        try:
            i, j, num = int(parts[0]), int(parts[1]), int(parts[2])
            den = int(parts[3]) if len(parts) == 4 else 1
        except ValueError:
            raise ParseError("non-integer field", lineno, 1) from None
        if not (0 <= i < header[0] and 0 <= j < header[1]):
            raise ParseError(f"index ({i}, {j}) out of range", lineno, 1)
        rows[i][j] = Fraction(num, den)
    if header is None:
        raise ParseError("empty triplet file")
    nrows, ncols, ring = header
    return SparseMatrix(rows, ncols, ring)


def ring_of(tag):
    if isinstance(tag, Ring):
        return tag
    return _ring_from_tag(tag)
