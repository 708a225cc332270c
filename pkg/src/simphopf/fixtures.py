"""Test triangulations and labelings."""

from __future__ import annotations

import cmath
import math
import random
from itertools import combinations, permutations
from typing import Optional

from .complex import AbstractComplex, build_complex
from .errors import RetryBudgetExhausted, TooFewVertices, WrongSourceDimension
from .pullback import Labeling, validate_labeling

RETRY_BUDGET = 10_000


def boundary_sphere(d: int) -> AbstractComplex:
    """Boundary of the (d+1)-simplex on vertices ``0..d+1``."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return build_complex(combinations(range(d + 2), d + 1))


def cyclic_polygon(p: int) -> AbstractComplex:
    if p < 3:
        raise TooFewVertices(f"a polygon needs at least 3 vertices, got {p}")
    return build_complex((i, (i + 1) % p) for i in range(p))


def join(a: AbstractComplex, b: AbstractComplex) -> AbstractComplex:
    shift = a.n_vertices
    return build_complex(
        fa + tuple(v + shift for v in fb) for fa in a.facets for fb in b.facets
    )


def join_labeling(a: Labeling, b: Labeling) -> Labeling:
    return Labeling(a.labels + b.labels)


def barycentric_subdivision(
    c: AbstractComplex, labeling: Optional[Labeling] = None
) -> tuple:
    """Barycentric subdivision with the minimum-vertex induced labeling.

    New vertices are the faces of ``c`` numbered by dimension and then
    lexicographically; a facet is a full flag of faces.  Returns
    ``(complex, labeling)``, the labeling being ``None`` if none was given.
    """
    vid = {}
    for fk in c.faces:
        for s in fk:
            vid[s] = len(vid)
    facets = []
    for f in c.facets:
        for order in permutations(f):
            flag = []
            rest = list(f)
            flag.append(vid[f])
            for v in order[:-1]:
                rest.remove(v)
                flag.append(vid[tuple(rest)])
            facets.append(tuple(flag))
    sd = build_complex(facets)
    if labeling is None:
        return sd, None
    # vid is already dense and increasing, so normalized ids equal vid values
    by_id = [0] * len(vid)
    for s, i in vid.items():
        by_id[i] = labeling[s[0]]
    return sd, Labeling(tuple(by_id[i] for i in sd.original_ids))


def constant_labeling(c: AbstractComplex, label: int = 1) -> Labeling:
    return Labeling((label,) * c.n_vertices)


def random_valid_labeling(
    c: AbstractComplex, n: int, seed, budget: int = RETRY_BUDGET
) -> Labeling:
    """Rejection-sample labels in ``1..n+2`` until the labeling is valid."""
    if c.dim != 2 * n - 1:
        raise WrongSourceDimension(f"source has dimension {c.dim}, expected {2 * n - 1}")
    rng = random.Random(seed)
    for _ in range(budget):
        lab = Labeling(tuple(rng.randint(1, n + 2) for _ in range(c.n_vertices)))
        if validate_labeling(c, lab, n).valid:
            return lab
    raise RetryBudgetExhausted(f"no valid labeling after {budget} draws")


def _random_rotation(rng: random.Random):
    w, x, y, z = (rng.gauss(0, 1) for _ in range(4))
    norm = math.sqrt(w * w + x * x + y * y + z * z)
    w, x, y, z = w / norm, x / norm, y / norm, z / norm
    return (
        (1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)),
        (2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)),
        (2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)),
    )


def sampled_hopf_map(p: int, q: int, rounds: int = 1, seed=0, twist: int = 1) -> tuple:
    """Label a subdivided polygon join by sampling the smooth Hopf map.

    The join of a p-gon and a q-gon sits in C^2 with the polygons on the
    unit circles of the two coordinate axes; barycenters are radially
    projected to S^3.  Each vertex gets the label of the (randomly rotated)
    regular tetrahedron vertex nearest to its image in S^2.  The labeling may
    be invalid or miss the homotopy class when the mesh is coarse; callers
    validate.

    ``twist = k`` first applies ``(z1, z2) -> (z1**k, z2)`` (normalized, with
    ``z1**k`` read as ``conj(z1)**-k`` for negative k), a degree-k self-map of
    S^3, so the sampled map has Hopf invariant k.
    """
    c = join(cyclic_polygon(p), cyclic_polygon(q))
    pts = [(cmath.exp(2j * math.pi * v / p), 0j) for v in range(p)]
    pts += [(0j, cmath.exp(2j * math.pi * v / q)) for v in range(q)]
    for _ in range(rounds):
        new_pts = []
        for fk in c.faces:
            for s in fk:
                a = sum(pts[v][0] for v in s) / len(s)
                b = sum(pts[v][1] for v in s) / len(s)
                r = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
                new_pts.append((a / r, b / r))
        c, _ = barycentric_subdivision(c)
        pts = new_pts
    rot = _random_rotation(random.Random(seed))
    tetra = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    targets = [tuple(sum(row[i] * t[i] for i in range(3)) for row in rot) for t in tetra]
    labels = []
    for z1, z2 in pts:
        if twist != 1:
            z1 = z1 ** twist if twist >= 0 else z1.conjugate() ** -twist
            r = math.sqrt(abs(z1) ** 2 + abs(z2) ** 2)
            z1, z2 = z1 / r, z2 / r
        w = z1 * z2.conjugate()
        image = (2 * w.real, 2 * w.imag, abs(z1) ** 2 - abs(z2) ** 2)
        scores = [sum(a * b for a, b in zip(image, t)) for t in targets]
        labels.append(1 + max(range(4), key=scores.__getitem__))
    return c, Labeling(tuple(labels))


# 12-vertex triangulation of S^3 with a labeling onto the boundary of the
# tetrahedron that has Hopf invariant +-1.  Produced by
# ``python scripts/find_hopf_fixture.py`` (best of 12 trials): the smooth Hopf
# map sampled on a subdivided join of two squares, then shrunk by
# label-preserving edge contractions.
# 12 vertices is the known minimum for a simplicial Hopf map onto this target.
HOPF_FACETS = (
    (0, 1, 3, 6), (0, 1, 3, 11), (0, 1, 6, 7), (0, 1, 7, 11), (0, 2, 3, 5),
    (0, 2, 3, 10), (0, 2, 5, 9), (0, 2, 9, 10), (0, 3, 5, 11), (0, 3, 6, 10),
    (0, 5, 7, 9), (0, 5, 7, 11), (0, 6, 7, 9), (0, 6, 9, 10), (1, 2, 5, 8),
    (1, 2, 5, 9), (1, 2, 8, 10), (1, 2, 9, 10), (1, 3, 4, 6), (1, 3, 4, 9),
    (1, 3, 9, 11), (1, 4, 5, 6), (1, 4, 5, 9), (1, 5, 6, 8), (1, 6, 7, 8),
    (1, 7, 8, 11), (1, 8, 9, 10), (1, 8, 9, 11), (2, 3, 5, 8), (2, 3, 8, 10),
    (3, 4, 6, 10), (3, 4, 9, 10), (3, 5, 8, 11), (3, 8, 9, 10), (3, 8, 9, 11),
    (4, 5, 6, 9), (4, 6, 9, 10), (5, 6, 7, 8), (5, 6, 7, 9), (5, 7, 8, 11),
)
HOPF_LABELS = (2, 2, 2, 1, 1, 1, 3, 4, 3, 4, 3, 4)
HOPF_F_VECTOR = (12, 52, 80, 40)


def hopf_fixture() -> tuple:
    c = build_complex(HOPF_FACETS)
    return c, Labeling(HOPF_LABELS)
