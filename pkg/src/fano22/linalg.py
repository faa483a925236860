"""Exact fraction-free linear algebra over polynomial entries.

Rank and determinants use Bareiss elimination (all intermediate
divisions are exact by Sylvester's identity), so the routines work
verbatim over Q and over polynomial rings in family parameters: pivots
are nonzero polynomials and no entry is ever evaluated.

Kernels are assembled from maximal minors (Cramer), which keeps every
entry inside the polynomial ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .poly import Polynomial, Registry


class ExactMatrix:
    """Rectangular matrix of Polynomial entries over one registry."""

    def __init__(self, registry: Registry, rows: Sequence[Sequence]):
        self.registry = registry
        coerced = []
        width = None
        for row in rows:
            out = []
            for entry in row:
                if isinstance(entry, (int, Fraction)):
                    entry = registry.const(entry)
                if entry.registry is not registry:
                    raise ValueError("matrix entries must share the registry")
                out.append(entry)
            if width is None:
                width = len(out)
            elif len(out) != width:
                raise ValueError("matrix rows must have equal length")
            coerced.append(out)
        self.rows: list[list[Polynomial]] = coerced
        self.nrows = len(coerced)
        self.ncols = width if width is not None else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _echelon(self):
        """Fraction-free forward elimination on a copy.

        Returns (working rows, pivot (row, col) pairs).
        """
        m = [row[:] for row in self.rows]
        pivots: list[tuple[int, int]] = []
        prev = self.registry.one
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if not m[i][c].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            for i in range(r + 1, self.nrows):
                head = m[i][c]  # captured before the row is overwritten
                for j in range(self.ncols):
                    num = m[r][c] * m[i][j] - head * m[r][j]
                    q = num.exact_divide(prev)
                    assert q is not None, "Bareiss division must be exact"
                    m[i][j] = q
            prev = m[r][c]
            pivots.append((r, c))
            r += 1
            if r == self.nrows:
                break
        return m, pivots

    def rank(self) -> int:
        _, pivots = self._echelon()
        return len(pivots)

    def det(self) -> Polynomial:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return self.registry.one
        m = [row[:] for row in self.rows]
        prev = self.registry.one
        sign = 1
        n = self.nrows
        for k in range(n):
            pivot_row = None
            for i in range(k, n):
                if not m[i][k].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                return self.registry.zero
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                    q = num.exact_divide(prev)
                    assert q is not None
                    m[i][j] = q
            prev = m[k][k]
        return m[n - 1][n - 1].scale(sign)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            self.registry,
            [[self.rows[i][j] for j in col_idx] for i in row_idx],
        )

    def kernel(self) -> list[list[Polynomial]]:
        """Basis of the right kernel, one vector per free column.

        Entries are polynomials (maximal minors), so the result is exact
        even with transcendental family parameters in the matrix.
        """
        echelon_rows, pivots = self._echelon()
        del echelon_rows
        pivot_cols = [c for _, c in pivots]
        # rows of the original matrix realizing the pivots: re-run the
        # elimination bookkeeping on row indices
        pivot_rows = self._pivot_row_indices(pivot_cols)
        free_cols = [c for c in range(self.ncols) if c not in pivot_cols]
        basis: list[list[Polynomial]] = []
        if not pivot_cols:
            for j in free_cols:
                vec = [self.registry.zero] * self.ncols
                vec[j] = self.registry.one
                basis.append(vec)
            return basis
        square = self.submatrix(pivot_rows, pivot_cols)
        big = square.det()
        for j in free_cols:
            vec = [self.registry.zero] * self.ncols
            vec[j] = big
            for i, c in enumerate(pivot_cols):
                cols = pivot_cols[:]
                cols[i] = j
                minor = self.submatrix(pivot_rows, cols).det()
                vec[c] = -minor
            basis.append(_normalize_vector(vec))
        return basis

    def _pivot_row_indices(self, pivot_cols: Sequence[int]) -> list[int]:
        """Row indices of the original matrix giving a nonsingular pivot block."""
        chosen: list[int] = []
        for k, _ in enumerate(pivot_cols):
            cols = pivot_cols[: k + 1]
            found = False
            for i in range(self.nrows):
                if i in chosen:
                    continue
                cand = self.submatrix(chosen + [i], cols)
                if cand.rank() == k + 1:
                    chosen.append(i)
                    found = True
                    break
            assert found, "pivot block extension must exist"
        return chosen

    def mul_vector(self, vec: Sequence[Polynomial]) -> list[Polynomial]:
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.rows:
            acc = self.registry.zero
            for entry, x in zip(row, vec):
                acc = acc + entry * x
            out.append(acc)
        return out


def _normalize_vector(vec: list[Polynomial]) -> list[Polynomial]:
    """Divide a polynomial vector by its common rational content."""
    nonzero = [p for p in vec if not p.is_zero()]
    if not nonzero:
        return vec
    from math import gcd
    num, den = 0, 1
    for p in nonzero:
        c = p.content()
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    content = Fraction(num, den)
    _, lead = nonzero[0].leading()
    if lead < 0:
        content = -content
    return [p.scale(1 / content) for p in vec]
