"""Exact rational linear algebra by fraction-free elimination.

Matrices are lists of rows; entries are ints or Fractions.  Elimination on
the integerised matrix follows Bareiss (every division is exact), so no
rounding can occur anywhere.  Pivots are chosen by first nonzero column,
then smallest absolute entry, then lowest row index; the fixed rule makes
every result deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Row = Sequence[Fraction | int]


def integerize_rows(rows: Sequence[Row]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (null space unchanged)."""
    out = []
    for row in rows:
        fracs = [Fraction(x) for x in row]
        scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
        out.append([int(f * scale) for f in fracs])
    return out


def _bareiss_echelon(m: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Row echelon form of an integer matrix, returning (rows, pivot columns).

    Fraction-free: the update (a*pivot - b*c) / previous_pivot divides
    exactly at every step.
    """
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        best = -1
        for i in range(r, nrows):
            v = m[i][c]
            if v and (best == -1 or abs(v) < abs(m[best][c])):
                best = i
        if best == -1:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            if any(m[i][c:]):
                head = m[i][c]
                for j in range(c, ncols):
                    m[i][j] = (piv * m[i][j] - head * m[r][j]) // prev
        pivots.append(c)
        prev = piv
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def echelon(rows: Sequence[Row]) -> tuple[list[list[int]], list[int]]:
    return _bareiss_echelon(integerize_rows(rows))


def rank(rows: Sequence[Row]) -> int:
    return len(echelon(rows)[1])


def _primitive(vec: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Scale to a primitive integer vector with positive leading entry."""
    fracs = [Fraction(x) for x in vec]
    nz = [f for f in fracs if f]
    if not nz:
        return tuple(fracs)
    scale = Fraction(lcm(*(f.denominator for f in nz)), gcd(*(abs(f.numerator) for f in nz)))
    if nz[0] < 0:
        scale = -scale
    return tuple(f * scale for f in fracs)


def nullspace(rows: Sequence[Row], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the right null space, one primitive vector per free column."""
    ech, pivots = echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            p = pivots[r]
            s = sum((Fraction(ech[r][c]) * x[c] for c in range(p + 1, ncols)), Fraction(0))
            x[p] = -s / ech[r][p]
        basis.append(_primitive(x))
    return basis


def row_space_basis(rows: Sequence[Row]) -> list[tuple[Fraction, ...]]:
    ech, _ = echelon(rows)
    return [_primitive(r) for r in ech]


def column_space_basis(rows: Sequence[Row], ncols: int) -> list[tuple[Fraction, ...]]:
    if not rows:
        return []
    # rows of the transpose live in the codomain of the original matrix
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
    return row_space_basis(transpose)


def solve(columns: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]) -> list[Fraction] | None:
    """One exact solution x of  sum_j x_j * columns[j] = rhs,  or None.

    Free variables, if any, are set to zero, so the answer is deterministic.
    """
    nrows = len(rhs)
    ncols = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(rhs[i])] for i in range(nrows)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        best = -1
        for i in range(r, nrows):
            v = aug[i][c]
            if v and (best == -1 or abs(v.numerator) < abs(aug[best][c].numerator)):
                best = i
        if best == -1:
            continue
        aug[r], aug[best] = aug[best], aug[r]
        piv = aug[r][c]
        for i in range(r + 1, nrows):
            if aug[i][c]:
                f = aug[i][c] / piv
                for j in range(c, ncols + 1):
                    aug[i][j] -= f * aug[r][j]
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for row, col in reversed(pivots):
        s = sum((aug[row][j] * x[j] for j in range(col + 1, ncols)), Fraction(0))
        x[col] = (aug[row][ncols] - s) / aug[row][col]
    return x


class IncrementalSpan:
    """Grow a subspace one vector at a time with exact reduction.

    ``add`` returns True (and extends the span) exactly when the vector is
    independent of everything added so far.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self._rows: list[list[Fraction]] = []
        self._pivot_cols: list[int] = []

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Sequence[Fraction | int]) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        if len(v) != self.dimension:
            raise ValueError(f"expected a vector of length {self.dimension}, got {len(v)}")
        for row, p in zip(self._rows, self._pivot_cols):
            if v[p]:
                f = v[p] / row[p]
                for j in range(self.dimension):
                    v[j] -= f * row[j]
        return v

    def contains(self, vec: Sequence[Fraction | int]) -> bool:
        return not any(self.reduce(vec))

    def add(self, vec: Sequence[Fraction | int]) -> bool:
        v = self.reduce(vec)
        for p in range(self.dimension):
            if v[p]:
                self._rows.append(v)
                self._pivot_cols.append(p)
                return True
        return False
