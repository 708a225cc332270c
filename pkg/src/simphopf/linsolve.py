"""Exact sparse elimination over the rationals.

Rows are dictionaries ``{column: value}`` with values kept as Python ints
while they stay integral and promoted to ``Fraction`` otherwise.  Pivots are
picked by a Markowitz rule, minimising ``(row_count - 1) * (col_count - 1)``
over the rows and columns of smallest current count, ties broken by the
lowest column index and then the lowest row index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cochains import Cochain, SparseRationalMatrix, coboundary, coboundary_matrix
from .complex import AbstractComplex
from .errors import DimensionOutOfRange, Inconsistent

# rows/columns examined per count bucket during the Markowitz search
SEARCH_LIMIT = 8


@dataclass(frozen=True)
class LinearSystem:
    matrix: SparseRationalMatrix
    rhs: tuple


@dataclass
class SolveReport:
    particular_solution: list
    rank: int
    nullity: int
    pivot_columns: list
    fill: int = 0
    inconsistent_rows: list = field(default_factory=list)


def assemble_system(c: AbstractComplex, rhs: Cochain) -> LinearSystem:
    """System ``delta(theta) = rhs`` for a degree-n right-hand side."""
    n = rhs.degree
    if n < 1:
        raise DimensionOutOfRange("right-hand side must have degree >= 1")
    matrix = coboundary_matrix(c, n - 1)
    return LinearSystem(matrix, tuple(rhs.to_vector()))


def _num(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _num(Fraction(a) / b)


class _Eliminator:
    def __init__(self, matrix: SparseRationalMatrix, rhs: Sequence, pivoting: str):
        self.n_cols = matrix.n_cols
        self.rows = [dict() for _ in range(matrix.n_rows)]
        for r, c, v in matrix.entries:
            self.rows[r][c] = _num(v)
        self.rhs = [_num(Fraction(v)) for v in rhs]
        self.col_rows = [dict() for _ in range(matrix.n_cols)]  # ordered sets
        for r, row in enumerate(self.rows):
            for c in row:
                self.col_rows[c][r] = None
        self.pivoting = pivoting
        self.pivots = []
        self.fill = 0
        self.inconsistent = []
        self.row_bucket: dict = {}
        self.col_bucket: dict = {}
        self.row_len = [0] * len(self.rows)
        self.col_len = [0] * self.n_cols
        self.active = set()
        for r, row in enumerate(self.rows):
            if row:
                self.active.add(r)
                self._set_row_len(r, len(row), first=True)
            elif self.rhs[r]:
                self.inconsistent.append(r)
        for c in range(self.n_cols):
            if self.col_rows[c]:
                self._set_col_len(c, len(self.col_rows[c]), first=True)
        self.next_natural_col = 0

    def _set_row_len(self, r, new, first=False):
        if not first:
            old = self.row_len[r]
            if old == new:
                return
            b = self.row_bucket[old]
            del b[r]
            if not b:
                del self.row_bucket[old]
        self.row_len[r] = new
        if new:
            self.row_bucket.setdefault(new, {})[r] = None

    def _set_col_len(self, c, new, first=False):
        if not first:
            old = self.col_len[c]
            if old == new:
                return
            b = self.col_bucket[old]
            del b[c]
            if not b:
                del self.col_bucket[old]
        self.col_len[c] = new
        if new:
            self.col_bucket.setdefault(new, {})[c] = None

    def _choose_markowitz(self):
        best = None
        row_keys = sorted(self.row_bucket)[:2]
        col_keys = sorted(self.col_bucket)[:2]
        for k in row_keys:
            for i, r in enumerate(self.row_bucket[k]):
                if i >= SEARCH_LIMIT:
                    break
                for c in self.rows[r]:
                    key = ((k - 1) * (self.col_len[c] - 1), c, r)
                    if best is None or key < best:
                        best = key
        for k in col_keys:
            for i, c in enumerate(self.col_bucket[k]):
                if i >= SEARCH_LIMIT:
                    break
                for r in self.col_rows[c]:
                    key = ((self.row_len[r] - 1) * (k - 1), c, r)
                    if best is None or key < best:
                        best = key
        return best[2], best[1]

    def _choose_natural(self):
        while self.next_natural_col < self.n_cols and not self.col_rows[self.next_natural_col]:
            self.next_natural_col += 1
        c = self.next_natural_col
        return min(self.col_rows[c]), c

    def run(self):
        rows, col_rows = self.rows, self.col_rows
        choose = self._choose_natural if self.pivoting == "natural" else self._choose_markowitz
        while self.active:
            r, c = choose()
            prow = rows[r]
            pv = prow[c]
            prhs = self.rhs[r]
            self.active.discard(r)
            self._set_row_len(r, 0)
            for j in prow:
                del col_rows[j][r]
            targets = list(col_rows[c])
            for r2 in targets:
                row2 = rows[r2]
                factor = _div(row2.pop(c), pv)
                for j, v in prow.items():
                    if j == c:
                        continue
                    old = row2.get(j)
                    new = -factor * v if old is None else old - factor * v
                    if new:
                        if old is None:
                            self.fill += 1
                            col_rows[j][r2] = None
                        row2[j] = _num(new)
                    elif old is not None:
                        del row2[j]
                        del col_rows[j][r2]
                if prhs:
                    self.rhs[r2] = _num(self.rhs[r2] - factor * prhs)
                if not row2:
                    self.active.discard(r2)
                    if self.rhs[r2]:
                        self.inconsistent.append(r2)
                self._set_row_len(r2, len(row2))
            col_rows[c].clear()
            for j in prow:
                self._set_col_len(j, len(col_rows[j]))
            self.pivots.append((r, c))

    def back_substitute(self, rhs=None, fixed=None) -> list:
        rhs = self.rhs if rhs is None else rhs
        x = [0] * self.n_cols
        if fixed:
            for j, v in fixed.items():
                x[j] = v
        for r, c in reversed(self.pivots):
            row = self.rows[r]
            acc = rhs[r]
            for j, v in row.items():
                if j != c and x[j]:
                    acc = acc - v * x[j]
            x[c] = _div(acc, row[c]) if acc else 0
        return [Fraction(v) for v in x]


def solve_particular(sys: LinearSystem, pivoting: str = "markowitz") -> SolveReport:
    """Exact particular solution with every free variable set to zero.

    Raises ``Inconsistent`` if some equation reduces to ``0 = nonzero``.
    """
    elim = _Eliminator(sys.matrix, sys.rhs, pivoting)
    elim.run()
    if elim.inconsistent:
        raise Inconsistent(
            f"{len(elim.inconsistent)} equation(s) reduce to 0 = nonzero, first row {elim.inconsistent[0]}"
        )
    x = elim.back_substitute()
    rank = len(elim.pivots)
    return SolveReport(
        particular_solution=x,
        rank=rank,
        nullity=sys.matrix.n_cols - rank,
        pivot_columns=sorted(c for _, c in elim.pivots),
        fill=elim.fill,
    )


def rank(mat: SparseRationalMatrix, pivoting: str = "markowitz") -> int:
    elim = _Eliminator(mat, [0] * mat.n_rows, pivoting)
    elim.run()
    return len(elim.pivots)


def kernel_basis(mat: SparseRationalMatrix) -> list:
    """One kernel vector per free column (that column set to 1, the others 0)."""
    elim = _Eliminator(mat, [0] * mat.n_rows, "markowitz")
    elim.run()
    pivot_cols = {c for _, c in elim.pivots}
    zero_rhs = [0] * mat.n_rows
    return [
        elim.back_substitute(zero_rhs, {f: 1})
        for f in range(mat.n_cols)
        if f not in pivot_cols
    ]


def kernel_perturbation(c: AbstractComplex, n: int, seed, max_abs: int = 3) -> Cochain:
    """``delta(eta)`` for a seeded random integer (n-2)-cochain ``eta``.

    For ``n == 1`` there are no (n-2)-cochains and the zero cochain is
    returned; ``max_abs=0`` gives ``eta = 0``.
    """
    if n < 2:
        return Cochain(c, max(n - 1, 0), {})
    rng = random.Random(seed)
    eta = Cochain(c, n - 2, {s: rng.randint(-max_abs, max_abs) for s in c.faces[n - 2]})
    return coboundary(eta)


def derived_nullity(f_vector: Sequence[int], n: int) -> int:
    """Kernel dimension of delta on C^(n-1) of a (2n-1)-sphere.

    Exactness gives ``f_{n-2} - f_{n-3} + ... +- f_0 -+ 1``.
    """
    total = 0
    sign = 1
    for i in range(n - 2, -1, -1):
        total += sign * f_vector[i]
        sign = -sign
    return total + sign


def printed_nullity(f_vector: Sequence[int], n: int) -> int:
    """The alternating sum starting at ``f_{n-1}`` (off by one degree)."""
    total = 0
    sign = 1
    for i in range(n - 1, -1, -1):
        total += sign * f_vector[i]
        sign = -sign
    return total + sign
