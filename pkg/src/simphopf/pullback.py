"""Target sphere, vertex labelings and the pulled-back cocycle.

The target is the boundary of the (n+1)-simplex on labels ``1..n+2``.  A
labeling is a simplicial map as long as no simplex of the source carries all
``n+2`` labels, since the full label set is the only subset that does not
span a face of the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .cochains import Cochain
from .complex import AbstractComplex, canonical_sign
from .errors import LabelingInvalid, NotAFacet, WrongSourceDimension


@dataclass(frozen=True)
class TargetSphere:
    n: int

    @property
    def labels(self) -> tuple:
        return tuple(range(1, self.n + 3))

    @property
    def facets(self) -> list:
        return list(combinations(self.labels, self.n + 1))

    def orientation(self, facet: Sequence[int]) -> int:
        """Coherent sign of a sorted facet: omitting label i gives (-1)**(i-1)."""
        facet = tuple(facet)
        if facet not in set(self.facets):
            raise NotAFacet(f"{facet} is not a facet of the target")
        (missing,) = set(self.labels) - set(facet)
        return (-1) ** (missing - 1)


@dataclass(frozen=True)
class Labeling:
    """Labels indexed by normalized vertex id."""

    labels: tuple

    @classmethod
    def from_mapping(cls, c: AbstractComplex, mapping: Mapping[int, int]) -> "Labeling":
        """Build from a dict keyed by the complex's original vertex ids."""
        return cls(tuple(mapping[v] for v in c.original_ids))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]

    def __len__(self):
        return len(self.labels)

    def permuted(self, perm: Mapping[int, int]) -> "Labeling":
        return Labeling(tuple(perm[x] for x in self.labels))


@dataclass(frozen=True)
class OmegaChoice:
    sigma_bar: tuple

    @classmethod
    def default(cls, n: int) -> "OmegaChoice":
        return cls(tuple(range(1, n + 2)))


@dataclass
class LabelingReport:
    valid: bool
    offending: list  # facets (normalized ids) carrying every label
    out_of_range: list  # vertices with labels outside 1..n+2

    def __bool__(self):
        return self.valid


def validate_labeling(c: AbstractComplex, labeling: Labeling, n: int) -> LabelingReport:
    if c.dim != 2 * n - 1:
        raise WrongSourceDimension(f"source has dimension {c.dim}, expected {2 * n - 1}")
    if len(labeling) != c.n_vertices:
        raise LabelingInvalid(f"{len(labeling)} labels for {c.n_vertices} vertices")
    bad_range = [v for v, x in enumerate(labeling.labels) if not 1 <= x <= n + 2]
    full = n + 2
    offending = [f for f in c.facets if len({labeling[v] for v in f}) == full]
    return LabelingReport(not offending and not bad_range, offending, bad_range)


def require_valid(c: AbstractComplex, labeling: Labeling, n: int) -> None:
    report = validate_labeling(c, labeling, n)
    if report.out_of_range:
        v = report.out_of_range[0]
        raise LabelingInvalid(
            f"vertex {c.original_ids[v]} has label {labeling[v]} outside 1..{n + 2}"
        )
    if report.offending:
        f = report.offending[0]
        orig = tuple(c.original_ids[v] for v in f)
        raise LabelingInvalid(
            f"facet {orig} carries all {n + 2} labels ({len(report.offending)} offending facet(s))",
            [tuple(c.original_ids[v] for v in g) for g in report.offending],
        )


class TargetCochain:
    """Degree-n cochain on the target sphere, keyed by sorted label tuples."""

    def __init__(self, target: TargetSphere, values: Mapping):
        self.target = target
        self.values = {s: Fraction(v) for s, v in values.items() if v}

    def __call__(self, labels: Sequence[int]) -> Fraction:
        if len(set(labels)) != len(labels):
            return Fraction(0)
        s, sign = canonical_sign(labels)
        v = self.values.get(s)
        return Fraction(0) if v is None else sign * v

    def total(self) -> Fraction:
        """Pairing with the coherently oriented fundamental class."""
        return sum(
            (self.target.orientation(s) * v for s, v in self.values.items()), Fraction(0)
        )


def make_omega(target: TargetSphere, choice: OmegaChoice) -> TargetCochain:
    sigma = tuple(choice.sigma_bar)
    if len(sigma) != target.n + 1 or len(set(sigma)) != len(sigma):
        raise NotAFacet(f"{sigma} is not an oriented facet of the {target.n}-sphere")
    if any(x not in target.labels for x in sigma):
        raise NotAFacet(f"{sigma} uses labels outside {target.labels}")
    s, sign = canonical_sign(sigma)
    return TargetCochain(target, {s: sign})


def pullback_omega(c: AbstractComplex, labeling: Labeling, omega: TargetCochain) -> Cochain:
    n = omega.target.n
    require_valid(c, labeling, n)
    out = {}
    for s in c.faces[n]:
        v = omega([labeling[u] for u in s])
        if v:
            out[s] = v
    return Cochain(c, n, out)
