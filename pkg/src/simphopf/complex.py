"""Finite abstract simplicial complexes given by facet lists.

Only closed, connected pseudomanifolds are accepted: that is what a
fundamental cycle needs.  Vertices are renumbered to ``0..f0-1`` preserving
the numeric order of the original ids, and that order is the global vertex
order used by every oriented computation in the package.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DegenerateFacet,
    DimensionOutOfRange,
    Disconnected,
    NonOrientable,
    NotClosed,
    NotPure,
)

Simplex = tuple  # strictly increasing tuple of vertex ids


def canonical_sign(vertices: Sequence[int]) -> tuple[Simplex, int]:
    """Sort an oriented simplex and return ``(sorted_tuple, parity)``.

    >>> canonical_sign([2, 0, 1])
    ((0, 1, 2), 1)
    >>> canonical_sign([1, 0])
    ((0, 1), -1)
    """
    verts = list(vertices)
    if len(set(verts)) != len(verts):
        raise DegenerateFacet(f"repeated vertex in {tuple(vertices)}")
    # parity via cycle decomposition of the sorting permutation
    order = sorted(range(len(verts)), key=verts.__getitem__)
    seen = [False] * len(verts)
    sign = 1
    for start in range(len(verts)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = order[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return tuple(sorted(verts)), sign


def boundary_faces(simplex: Simplex):
    """Yield ``(i, face)`` where ``face`` omits the i-th vertex."""
    for i in range(len(simplex)):
        yield i, simplex[:i] + simplex[i + 1:]


@dataclass(frozen=True, eq=False)
class AbstractComplex:
    """Immutable closed pseudomanifold; build it with :func:`build_complex`."""

    n_vertices: int
    facets: tuple  # sorted list of sorted facet tuples
    faces: tuple  # faces[k] = lexicographically sorted k-faces
    original_ids: tuple  # normalized id -> id used in the input
    _index: tuple = field(repr=False)
    _ridge_facets: dict = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.faces) - 1

    @property
    def f_vector(self) -> tuple:
        return tuple(len(fk) for fk in self.faces)

    def index(self, k: int) -> dict:
        """Map from k-face to its position in :func:`enumerate_faces`."""
        return self._index[k]

    def ridge_facets(self, ridge: Simplex) -> tuple:
        return self._ridge_facets[ridge]

    def __repr__(self):
        return f"AbstractComplex(dim={self.dim}, f_vector={self.f_vector})"


def _normalize(facets: Iterable[Sequence[int]]):
    raw = [tuple(f) for f in facets]
    if not raw:
        raise NotPure("empty facet list")
    for f in raw:
        if len(set(f)) != len(f):
            raise DegenerateFacet(f"facet {f} repeats a vertex")
    sizes = {len(f) for f in raw}
    if len(sizes) != 1:
        raise NotPure(f"facets have mixed sizes {sorted(sizes)}")
    if sizes == {0}:
        raise NotPure("facets must have at least one vertex")
    original = sorted({v for f in raw for v in f})
    for v in original:
        if not isinstance(v, int) or v < 0:
            raise DegenerateFacet(f"vertex id {v!r} is not a non-negative integer")
    relabel = {v: i for i, v in enumerate(original)}
    normalized = sorted({tuple(sorted(relabel[v] for v in f)) for f in raw})
    if len(normalized) != len(raw):
        raise DegenerateFacet("duplicate facet in input")
    return normalized, tuple(original)


def ridge_incidence(facets: Sequence[Simplex]) -> dict:
    incidence: dict = {}
    for idx, f in enumerate(facets):
        for _, r in boundary_faces(f):
            incidence.setdefault(r, []).append(idx)
    return incidence


def check_closed(facets: Sequence[Simplex]) -> dict:
    incidence = ridge_incidence(facets)
    bad = sorted(r for r, fs in incidence.items() if len(fs) != 2)
    if bad:
        raise NotClosed(
            f"{len(bad)} ridge(s) not in exactly two facets, first {bad[0]}", bad
        )
    return incidence


def check_connected(facets: Sequence[Simplex], incidence: dict) -> None:
    adj = _dual_graph(len(facets), incidence)
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b, _ in adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    if len(seen) != len(facets):
        raise Disconnected(
            f"dual graph has {len(facets) - len(seen)} facet(s) unreachable from {facets[0]}"
        )


def _dual_graph(n_facets: int, incidence: dict):
    adj = [[] for _ in range(n_facets)]
    for r, (a, b) in sorted(incidence.items()):
        adj[a].append((b, r))
        adj[b].append((a, r))
    return adj


def build_complex(facets: Iterable[Sequence[int]]) -> AbstractComplex:
    """Validate a facet list and enumerate every face.

    Raises ``NotPure``, ``DegenerateFacet``, ``NotClosed`` or ``Disconnected``.
    Orientability is checked separately by :func:`compute_fundamental_cycle`.
    """
    normalized, original = _normalize(facets)
    m = len(normalized[0]) - 1
    if m == 0:
        # S^0: two points, the facets are their own (empty) ridges
        if len(normalized) != 2:
            raise NotClosed("a 0-dimensional closed pseudomanifold has two points")
        incidence = {(): [0, 1]}
    else:
        incidence = check_closed(normalized)
        check_connected(normalized, incidence)
    faces = []
    for k in range(m + 1):
        fk = set()
        for f in normalized:
            fk.update(combinations(f, k + 1))
        faces.append(tuple(sorted(fk)))
    index = tuple({s: i for i, s in enumerate(fk)} for fk in faces)
    ridge_map = {r: tuple(fs) for r, fs in incidence.items()}
    return AbstractComplex(
        n_vertices=len(original),
        facets=tuple(normalized),
        faces=tuple(faces),
        original_ids=original,
        _index=index,
        _ridge_facets=ridge_map,
    )


def enumerate_faces(c: AbstractComplex, k: int) -> list:
    if not 0 <= k <= c.dim:
        raise DimensionOutOfRange(f"k={k} outside 0..{c.dim}")
    return list(c.faces[k])


@dataclass(frozen=True)
class FundamentalCycle:
    """Coefficient +-1 per facet, aligned with ``complex.facets``."""

    complex: AbstractComplex
    epsilon: tuple

    def __getitem__(self, facet: Simplex) -> int:
        return self.epsilon[self.complex.index(self.complex.dim)[facet]]

    def reversed(self) -> "FundamentalCycle":
        return FundamentalCycle(self.complex, tuple(-e for e in self.epsilon))

    def as_dict(self) -> dict:
        return dict(zip(self.complex.facets, self.epsilon))


def compute_fundamental_cycle(c: AbstractComplex) -> FundamentalCycle:
    """Propagate an orientation over the dual graph.

    The lexicographically smallest facet gets +1.  Across a shared ridge the
    two induced boundary coefficients must cancel; a conflict means the
    pseudomanifold is not orientable.
    """
    facets = c.facets
    if c.dim == 0:
        return FundamentalCycle(c, (1, -1))
    adj = _dual_graph(len(facets), c._ridge_facets)
    eps = [0] * len(facets)
    eps[0] = 1
    queue = deque([0])
    while queue:
        a = queue.popleft()
        fa = facets[a]
        for b, r in adj[a]:
            ia = _omitted_position(fa, r)
            ib = _omitted_position(facets[b], r)
            want = -eps[a] * (-1) ** (ia + ib)
            if eps[b] == 0:
                eps[b] = want
                queue.append(b)
            elif eps[b] != want:
                raise NonOrientable(
                    f"orientation conflict between facets {fa} and {facets[b]}"
                )
    return FundamentalCycle(c, tuple(eps))


def _omitted_position(facet: Simplex, ridge: Simplex) -> int:
    for i, (a, b) in enumerate(zip(facet, ridge)):
        if a != b:
            return i
    return len(ridge)


def cycle_boundary(cycle: FundamentalCycle) -> dict:
    """Simplicial boundary of the chain sum(eps * facet); zero entries dropped."""
    out: dict = {}
    for f, e in zip(cycle.complex.facets, cycle.epsilon):
        for i, r in boundary_faces(f):
            out[r] = out.get(r, 0) + e * (-1) ** i
    return {r: v for r, v in out.items() if v}
