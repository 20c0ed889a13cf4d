"""Exact linear algebra over the rationals.

Rank, reduced row echelon form, nullspace and linear solving for dense
matrices of Fractions.  Everything downstream (syzygy spaces, splitting
types, Tjurina numbers) reduces to these routines, so they are exact by
construction: no floating point anywhere.

The elimination engine clears each row to a primitive integer vector and
eliminates by cross-multiplication, dividing every updated row by its
content.  On the structured coefficient matrices that show up here this
keeps entries small.  Rows are held as {column: value} dicts during
elimination; the public interface is dense.  The reduced echelon form is
unique whatever the pivot order, so results do not depend on the internal
pivot strategy.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional

Rational = Fraction


def rational_from_string(s: str) -> Fraction:
    """Parse "p" or "p/q" with integer p, q.  Rejects decimals and floats."""
    s = s.strip()
    body = s[1:] if s[:1] == "-" else s
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise ValueError(f"not an integer-ratio literal: {s!r}")
    if sep and int(den) == 0:
        raise ValueError(f"zero denominator: {s!r}")
    return Fraction(s)


def rational_to_string(q: Fraction) -> str:
    return str(q)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols: Optional[int] = None):
        grid = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if grid:
            cols = len(grid[0])
            if any(len(row) != cols for row in grid):
                raise ValueError("ragged rows")
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.cols, self.entries))

    def __repr__(self):
        return f"Matrix({[list(map(str, r)) for r in self.entries]})"

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: tuple
    rank: int


def _int_rows(rows):
    """Clear dict rows of Fractions to primitive integer dict rows."""
    out = []
    for r in rows:
        if not r:
            continue
        den = 1
        for v in r.values():
            dv = v.denominator
            den = den * dv // gcd(den, dv)
        ir = {j: int(v * den) for j, v in r.items()}
        g = 0
        for v in ir.values():
            g = gcd(g, v)
            if g == 1:
                break
        if g > 1:
            ir = {j: v // g for j, v in ir.items()}
        out.append(ir)
    return out


def _combine(target, scale_t, source, scale_s, skip):
    """target*scale_t - source*scale_s with the skip column dropped, content-reduced."""
    new = {j: v * scale_t for j, v in target.items() if j != skip}
    for j, v in source.items():
        if j == skip:
            continue
        w = new.get(j, 0) - v * scale_s
        if w:
            new[j] = w
        elif j in new:
            del new[j]
    if new:
        g = 0
        for v in new.values():
            g = gcd(g, v)
            if g == 1:
                return new
        if g > 1:
            return {j: v // g for j, v in new.items()}
    return new


def _echelon(rows, ncols):
    """Forward elimination on integer dict rows.

    Returns (pivot_rows, pivots): pivot_rows[i] has leading column pivots[i]
    and zeros in pivots[k] for k < i.
    """
    work = [r for r in rows if r]
    pivot_rows = []
    pivots = []
    for col in range(ncols):
        best = -1
        for i, r in enumerate(work):
            if col in r and (best < 0 or len(r) < len(work[best])):
                best = i
        if best < 0:
            continue
        prow = work.pop(best)
        pv = prow[col]
        nxt = []
        for r in work:
            if col in r:
                r = _combine(r, pv, prow, r[col], col)
                if not r:
                    continue
            nxt.append(r)
        work = nxt
        pivot_rows.append(prow)
        pivots.append(col)
        if not work:
            break
    return pivot_rows, pivots


def _back_substitute(pivot_rows, pivots):
    """Clear entries above each pivot; rows stay integer and primitive."""
    for i in range(len(pivot_rows) - 1, -1, -1):
        pc = pivots[i]
        pv = pivot_rows[i][pc]
        for k in range(i):
            r = pivot_rows[k]
            if pc in r:
                pivot_rows[k] = _combine(r, pv, pivot_rows[i], r[pc], pc)


def sparse_rank(rows, ncols) -> int:
    """Rank of dict rows (integer or Fraction values)."""
    _, pivots = _echelon(_int_rows(rows), ncols)
    return len(pivots)


def sparse_rref(rows, ncols):
    """Canonical RREF of dict rows.  Returns (rows as {col: Fraction}, pivots)."""
    pivot_rows, pivots = _echelon(_int_rows(rows), ncols)
    _back_substitute(pivot_rows, pivots)
    out = []
    for i, r in enumerate(pivot_rows):
        pv = r[pivots[i]]
        out.append({j: Fraction(v, pv) for j, v in r.items()})
    return out, pivots


def sparse_nullspace(rows, ncols):
    """Canonical RREF nullspace basis, one dict vector per free column."""
    rr, pivots = sparse_rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for q in range(ncols):
        if q in pivot_set:
            continue
        v = {q: Fraction(1)}
        for i, p in enumerate(pivots):
            c = rr[i].get(q)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def _to_dict_rows(m: Matrix):
    return [
        {j: v for j, v in enumerate(row) if v}
        for row in m.entries
    ]


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form, pivot columns, rank."""
    rr, pivots = sparse_rref(_to_dict_rows(m), m.cols)
    grid = [[Fraction(0)] * m.cols for _ in range(m.rows)]
    for i, r in enumerate(rr):
        for j, v in r.items():
            grid[i][j] = v
    return RrefResult(Matrix(grid, cols=m.cols), tuple(pivots), len(pivots))


def nullspace(m: Matrix):
    """Basis of the right kernel of m, canonical RREF basis, as tuples."""
    basis = sparse_nullspace(_to_dict_rows(m), m.cols)
    return [
        tuple(v.get(j, Fraction(0)) for j in range(m.cols))
        for v in basis
    ]


def rank(m: Matrix) -> int:
    return sparse_rank(_to_dict_rows(m), m.cols)


def solve(m: Matrix, b):
    """Particular solution of m x = b with free variables zero, or None."""
    if len(b) != m.rows:
        raise ValueError("dimension mismatch")
    rows = _to_dict_rows(m)
    for i, bv in enumerate(b):
        bv = Fraction(bv)
        if bv:
            rows[i][m.cols] = bv
    rr, pivots = sparse_rref(rows, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = rr[i].get(m.cols, Fraction(0))
    return tuple(x)
