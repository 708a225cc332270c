"""Rational simplicial cochains, coboundary, cup product and pairing.

Cochains are stored sparsely on sorted simplices.  Evaluating on an arbitrary
vertex ordering multiplies by the parity of the sorting permutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .complex import AbstractComplex, boundary_faces, canonical_sign
from .errors import DegreeMismatch, DimensionOutOfRange, MixedComplexes


def _clean(values: Mapping) -> dict:
    return {s: Fraction(v) for s, v in values.items() if v}


@dataclass(frozen=True, eq=False)
class Cochain:
    complex: AbstractComplex
    degree: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.degree <= self.complex.dim:
            raise DimensionOutOfRange(f"degree {self.degree} outside 0..{self.complex.dim}")
        object.__setattr__(self, "values", _clean(self.values))
        idx = self.complex.index(self.degree)
        for s in self.values:
            if s not in idx:
                raise KeyError(f"{s} is not a {self.degree}-face of the complex")

    @classmethod
    def from_vector(cls, c: AbstractComplex, degree: int, vec: Sequence) -> "Cochain":
        faces = c.faces[degree]
        if len(vec) != len(faces):
            raise DegreeMismatch(f"vector of length {len(vec)} for {len(faces)} faces")
        return cls(c, degree, {s: v for s, v in zip(faces, vec) if v})

    def to_vector(self) -> list:
        return [self.values.get(s, Fraction(0)) for s in self.complex.faces[self.degree]]

    def __call__(self, simplex: Sequence[int]) -> Fraction:
        s, sign = canonical_sign(simplex)
        if len(s) != self.degree + 1:
            raise DegreeMismatch(f"{tuple(simplex)} is not a {self.degree}-simplex")
        v = self.values.get(s)
        return Fraction(0) if v is None else sign * v

    def _check_compatible(self, other: "Cochain"):
        if other.complex is not self.complex:
            raise MixedComplexes("cochains live on different complexes")
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        out = dict(self.values)
        for s, v in other.values.items():
            out[s] = out.get(s, 0) + v
        return Cochain(self.complex, self.degree, out)

    def __neg__(self) -> "Cochain":
        return Cochain(self.complex, self.degree, {s: -v for s, v in self.values.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __mul__(self, scalar) -> "Cochain":
        return Cochain(self.complex, self.degree, {s: scalar * v for s, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.complex is other.complex
            and self.degree == other.degree
            and self.values == other.values
        )

    def is_zero(self) -> bool:
        return not self.values


@dataclass(frozen=True, eq=False)
class Chain:
    """Integer chain; the fundamental cycle is the main instance."""

    complex: AbstractComplex
    degree: int
    coefficients: dict

    def __post_init__(self):
        idx = self.complex.index(self.degree)
        for s in self.coefficients:
            if s not in idx:
                raise KeyError(f"{s} is not a {self.degree}-face of the complex")

    @classmethod
    def from_cycle(cls, cycle) -> "Chain":
        c = cycle.complex
        return cls(c, c.dim, cycle.as_dict())


def coboundary(a: Cochain) -> Cochain:
    c = a.complex
    k = a.degree
    if k + 1 > c.dim:
        raise DimensionOutOfRange(f"no coboundary out of top degree {k}")
    vals = a.values
    out = {}
    for s in c.faces[k + 1]:
        total = 0
        for i, face in boundary_faces(s):
            v = vals.get(face)
            if v:
                total += v if i % 2 == 0 else -v
        if total:
            out[s] = total
    return Cochain(c, k + 1, out)


def cup(a: Cochain, b: Cochain) -> Cochain:
    """Front-face/back-face product on sorted simplices."""
    if a.complex is not b.complex:
        raise MixedComplexes("cup of cochains on different complexes")
    c = a.complex
    k, l = a.degree, b.degree
    if k + l > c.dim:
        raise DimensionOutOfRange(f"cup degree {k + l} exceeds dimension {c.dim}")
    av, bv = a.values, b.values
    out = {}
    if not av or not bv:
        return Cochain(c, k + l, out)
    for s in c.faces[k + l]:
        x = av.get(s[: k + 1])
        if x:
            y = bv.get(s[k:])
            if y:
                out[s] = x * y
    return Cochain(c, k + l, out)


def pair(a: Cochain, z: Chain) -> Fraction:
    if a.complex is not z.complex:
        raise MixedComplexes("pairing across different complexes")
    if a.degree != z.degree:
        raise DegreeMismatch(f"cochain degree {a.degree} vs chain degree {z.degree}")
    vals = a.values
    total = Fraction(0)
    for s, coeff in z.coefficients.items():
        v = vals.get(s)
        if v:
            total += coeff * v
    return total


@dataclass(frozen=True)
class SparseRationalMatrix:
    n_rows: int
    n_cols: int
    entries: tuple  # (row, col, Fraction), sorted, unique positions, no zeros

    def __post_init__(self):
        seen = set()
        for r, c, v in self.entries:
            if not (0 <= r < self.n_rows and 0 <= c < self.n_cols):
                raise IndexError(f"entry ({r}, {c}) out of range")
            if (r, c) in seen:
                raise ValueError(f"duplicate entry at ({r}, {c})")
            if v == 0:
                raise ValueError(f"stored zero at ({r}, {c})")
            seen.add((r, c))

    @classmethod
    def from_rows(cls, n_rows: int, n_cols: int, rows: Sequence[Mapping]) -> "SparseRationalMatrix":
        entries = tuple(
            (i, j, Fraction(v)) for i, row in enumerate(rows) for j, v in sorted(row.items()) if v
        )
        return cls(n_rows, n_cols, entries)

    @property
    def shape(self):
        return self.n_rows, self.n_cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def rows(self) -> list:
        out = [dict() for _ in range(self.n_rows)]
        for r, c, v in self.entries:
            out[r][c] = v
        return out

    def matvec(self, x: Sequence) -> list:
        y = [Fraction(0)] * self.n_rows
        for r, c, v in self.entries:
            if x[c]:
                y[r] += v * x[c]
        return y

    def matmul(self, other: "SparseRationalMatrix") -> "SparseRationalMatrix":
        if self.n_cols != other.n_rows:
            raise DegreeMismatch(f"shapes {self.shape} and {other.shape}")
        other_rows = other.rows()
        rows = []
        for row in self.rows():
            acc: dict = {}
            for k, v in row.items():
                for j, w in other_rows[k].items():
                    acc[j] = acc.get(j, 0) + v * w
            rows.append(acc)
        return SparseRationalMatrix.from_rows(self.n_rows, other.n_cols, rows)

    def to_dense(self) -> list:
        dense = [[Fraction(0)] * self.n_cols for _ in range(self.n_rows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense


def coboundary_matrix(c: AbstractComplex, k: int) -> SparseRationalMatrix:
    """Matrix of delta: C^k -> C^(k+1); rows are (k+1)-faces, columns k-faces."""
    if not 0 <= k or k + 1 > c.dim:
        raise DimensionOutOfRange(f"no coboundary matrix for degree {k} on dimension {c.dim}")
    col_index = c.index(k)
    entries = []
    one, minus_one = Fraction(1), Fraction(-1)
    for row, s in enumerate(c.faces[k + 1]):
        for i, face in boundary_faces(s):
            entries.append((row, col_index[face], one if i % 2 == 0 else minus_one))
    entries.sort()
    return SparseRationalMatrix(len(c.faces[k + 1]), len(c.faces[k]), tuple(entries))
