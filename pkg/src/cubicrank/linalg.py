"""Exact linear algebra over the rationals and over polynomial rings.

Rank is computed by fraction-free (Bareiss) elimination on integer-scaled
rows, so it is exact for any rational input.  PolyMatrix carries MultiPoly
entries; its minors are exact polynomials, and specializing all parameters
turns it back into an ExactMatrix.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import List, Sequence

from .poly import MultiPoly


class ExactMatrix:
    """Dense matrix of Fractions."""

    def __init__(self, entries: Sequence[Sequence]):
        self.entries: List[List[Fraction]] = [
            [e if isinstance(e, Fraction) else Fraction(e) for e in row]
            for row in entries
        ]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.entries == other.entries

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix([list(col) for col in zip(*self.entries)])

    def _integer_rows(self) -> List[List[int]]:
        out = []
        for row in self.entries:
            den = 1
            for e in row:
                den = den * e.denominator // _gcd(den, e.denominator)
            out.append([int(e * den) for e in row])
        return out

    def rank(self) -> int:
        """Exact rank via fraction-free Gaussian elimination."""
        m = self._integer_rows()
        rows, cols = self.rows, self.cols
        rank = 0
        prev_pivot = 1
        row = 0
        for col in range(cols):
            pivot_row = None
            for r in range(row, rows):
                if m[r][col] != 0:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[row], m[pivot_row] = m[pivot_row], m[row]
            pivot = m[row][col]
            for r in range(row + 1, rows):
                factor = m[r][col]
                for c in range(col, cols):
                    m[r][c] = (pivot * m[r][c] - factor * m[row][c]) // prev_pivot
            prev_pivot = pivot
            row += 1
            rank += 1
            if row == rows:
                break
        return rank

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = [row[:] for row in self.entries]
        sign = 1
        for col in range(n):
            pivot_row = None
            for r in range(col, n):
                if m[r][col] != 0:
                    pivot_row = r
                    break
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != col:
                m[col], m[pivot_row] = m[pivot_row], m[col]
                sign = -sign
            pivot = m[col][col]
            for r in range(col + 1, n):
                factor = m[r][col] / pivot
                if factor == 0:
                    continue
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
        det = Fraction(sign)
        for i in range(n):
            det *= m[i][i]
        return det

    def rank_by_minors(self) -> int:
        """Largest k with a nonzero k x k minor; brute-force cross-check."""
        best = 0
        for k in range(1, min(self.rows, self.cols) + 1):
            found = False
            for rows in itertools.combinations(range(self.rows), k):
                for cols in itertools.combinations(range(self.cols), k):
                    sub = ExactMatrix([[self.entries[i][j] for j in cols] for i in rows])
                    if sub.det() != 0:
                        found = True
                        break
                if found:
                    break
            if found:
                best = k
            else:
                break
        return best

    def rank_naive(self) -> int:
        """Plain rational Gaussian elimination, for cross-checking."""
        m = [row[:] for row in self.entries]
        rows, cols = self.rows, self.cols
        rank = 0
        row = 0
        for col in range(cols):
            pivot_row = None
            for r in range(row, rows):
                if m[r][col] != 0:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[row], m[pivot_row] = m[pivot_row], m[row]
            pivot = m[row][col]
            for r in range(row + 1, rows):
                factor = m[r][col] / pivot
                if factor:
                    for c in range(col, cols):
                        m[r][c] -= factor * m[row][c]
            row += 1
            rank += 1
            if row == rows:
                break
        return rank

    def nullspace(self) -> List[List[Fraction]]:
        """Basis of the right kernel, exact."""
        m = [row[:] for row in self.entries]
        rows, cols = self.rows, self.cols
        pivots = []
        row = 0
        for col in range(cols):
            pivot_row = None
            for r in range(row, rows):
                if m[r][col] != 0:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[row], m[pivot_row] = m[pivot_row], m[row]
            pivot = m[row][col]
            m[row] = [e / pivot for e in m[row]]
            for r in range(rows):
                if r != row and m[r][col] != 0:
                    factor = m[r][col]
                    m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
            pivots.append(col)
            row += 1
            if row == rows:
                break
        free = [c for c in range(cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * cols
            vec[fc] = Fraction(1)
            for prow, pcol in enumerate(pivots):
                vec[pcol] = -m[prow][fc]
            basis.append(vec)
        return basis

    def solve(self, rhs: Sequence[Fraction]):
        """One exact solution of self * x = rhs, or None if inconsistent."""
        aug = ExactMatrix(
            [list(row) + [Fraction(rhs[i])] for i, row in enumerate(self.entries)]
        )
        m = [row[:] for row in aug.entries]
        rows, cols = self.rows, self.cols
        pivots = []
        row = 0
        for col in range(cols):
            pivot_row = None
            for r in range(row, rows):
                if m[r][col] != 0:
                    pivot_row = r
                    break
            if pivot_row is None:
                continue
            m[row], m[pivot_row] = m[pivot_row], m[row]
            pivot = m[row][col]
            m[row] = [e / pivot for e in m[row]]
            for r in range(rows):
                if r != row and m[r][col] != 0:
                    factor = m[r][col]
                    m[r] = [a - factor * b for a, b in zip(m[r], m[row])]
            pivots.append(col)
            row += 1
            if row == rows:
                break
        for r in range(row, rows):
            if m[r][cols] != 0:
                return None
        x = [Fraction(0)] * cols
        for prow, pcol in enumerate(pivots):
            x[pcol] = m[prow][cols]
        return x


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else 1


class PolyMatrix:
    """Matrix with MultiPoly entries (symbolic parameters allowed)."""

    def __init__(self, entries: Sequence[Sequence[MultiPoly]]):
        self.entries: List[List[MultiPoly]] = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
        self.vars = self.entries[0][0].vars if self.rows else ()

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def hstack(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch in hstack")
        return PolyMatrix(
            [list(a) + list(b) for a, b in zip(self.entries, other.entries)]
        )

    def det(self) -> MultiPoly:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return self._det_rows(tuple(range(self.rows)), tuple(range(self.cols)))

    def _det_rows(self, rows: tuple, cols: tuple) -> MultiPoly:
        n = len(rows)
        if n == 1:
            return self.entries[rows[0]][cols[0]]
        total = MultiPoly.zero(self.vars)
        r0 = rows[0]
        rest = rows[1:]
        for idx, c in enumerate(cols):
            entry = self.entries[r0][c]
            if entry.is_zero():
                continue
            sub = self._det_rows(rest, cols[:idx] + cols[idx + 1 :])
            piece = entry * sub
            total = total + piece if idx % 2 == 0 else total - piece
        return total

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> MultiPoly:
        return self._det_rows(tuple(rows), tuple(cols))

    def minors(self, size: int) -> List[MultiPoly]:
        """All size x size minors, ordered by (row-tuple, col-tuple)."""
        if size <= 0:
            raise ValueError("minor size must be positive")
        if size > min(self.rows, self.cols):
            raise ValueError("minor size exceeds matrix dimensions")
        out = []
        for rows in itertools.combinations(range(self.rows), size):
            for cols in itertools.combinations(range(self.cols), size):
                out.append(self._det_rows(rows, cols))
        return out

    def specialize(self, assignment) -> ExactMatrix:
        """Substitute scalars for every variable, yielding an ExactMatrix."""
        out = []
        for row in self.entries:
            new_row = []
            for e in row:
                val = e.eval_exact([assignment[v] for v in e.vars])
                new_row.append(val)
            out.append(new_row)
        return ExactMatrix(out)

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in row] for row in self.entries])

    def is_constant(self) -> bool:
        return all(e.is_constant() for row in self.entries for e in row)

    def to_exact(self) -> ExactMatrix:
        if not self.is_constant():
            raise ValueError("matrix has non-constant entries")
        return ExactMatrix(
            [[e.constant_value() for e in row] for row in self.entries]
        )
